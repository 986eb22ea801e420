"""Exception hierarchy shared across the pipeline.

Two branches matter to callers: ``InputDataError`` (bad files, bad
metadata, malformed lexicons) and ``ComputationError`` (a numerically or
structurally impossible request on otherwise valid data). The CLI maps
them to exit codes 2 and 3.
"""

from __future__ import annotations


class SkillnetError(Exception):
    """Base class for all package-specific errors."""


class InputDataError(SkillnetError):
    """Invalid or unreadable user input."""


class ComputationError(SkillnetError):
    """Valid input on which the requested computation is undefined."""


class UnreadableFile(InputDataError):
    def __init__(self, path, reason=""):
        self.path = path
        suffix = f": {reason}" if reason else ""
        super().__init__(f"cannot read {path}{suffix}")


class MissingMetadata(InputDataError):
    def __init__(self, doc_id):
        self.doc_id = doc_id
        super().__init__(f"no metadata row for document {doc_id!r}")


class DuplicateDocId(InputDataError):
    def __init__(self, doc_id):
        self.doc_id = doc_id
        super().__init__(f"duplicate document id {doc_id!r}")


class InvalidEnumValue(InputDataError):
    def __init__(self, field, value):
        self.field = field
        self.value = value
        super().__init__(f"invalid value {value!r} for field {field!r}")


class EmptyLexicon(InputDataError):
    def __init__(self, path):
        self.path = path
        super().__init__(f"lexicon file {path} contains no patterns")


class DuplicatePatternId(InputDataError):
    def __init__(self, pattern_id):
        self.pattern_id = pattern_id
        super().__init__(f"duplicate pattern {pattern_id!r}")


class InvalidPatternLine(InputDataError):
    def __init__(self, line, reason):
        self.line = line
        super().__init__(f"bad lexicon line {line!r}: {reason}")


class NodeIdCollision(InputDataError):
    def __init__(self, node_id):
        self.node_id = node_id
        super().__init__(
            f"id {node_id!r} appears both as a document and as a skill"
        )


class NoEdges(ComputationError):
    def __init__(self):
        super().__init__("eigenvector centrality is undefined on an edgeless graph")


class NonConvergence(ComputationError):
    """Power iteration ran out of iterations; carries the last iterate."""

    def __init__(self, max_iters, last_iterate):
        self.max_iters = max_iters
        self.last_iterate = last_iterate
        super().__init__(f"power iteration did not converge in {max_iters} iterations")


class EmptyStratum(ComputationError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"stratum {label!r} has no documents")


class DegenerateInput(ComputationError):
    def __init__(self, reason):
        super().__init__(reason)


class LengthMismatch(InputDataError):
    def __init__(self, lengths):
        self.lengths = lengths
        super().__init__(f"vectors have unequal lengths {lengths}")
