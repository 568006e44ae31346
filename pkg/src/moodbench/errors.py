"""Exception types raised across moodbench.

Every error derives from :class:`MoodbenchError` so callers (notably the CLI)
can map library failures to a single exit code. I/O problems are not wrapped;
they surface as the usual :class:`OSError`.
"""


class MoodbenchError(Exception):
    """Base class for all moodbench errors."""


class MalformedRecord(MoodbenchError):
    def __init__(self, line_no, reason="unparseable record"):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"malformed record on line {line_no}: {reason}")


class DuplicateId(MoodbenchError):
    def __init__(self, post_id):
        self.post_id = post_id
        super().__init__(f"duplicate post id {post_id!r}")


class EmptyLexicon(MoodbenchError):
    def __init__(self, source=""):
        super().__init__(f"no lexicon entries survived loading {source}".rstrip())


class MissingClass(MoodbenchError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"no posts with label {label}")


class DictUnavailable(MoodbenchError):
    pass


class EmptyVocabulary(MoodbenchError):
    pass


class DimensionMismatch(MoodbenchError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class EmptyTestSet(MoodbenchError):
    def __init__(self):
        super().__init__("empty test set")


class CorruptModel(MoodbenchError):
    pass


class VersionMismatch(MoodbenchError):
    def __init__(self, found, supported):
        self.found = found
        self.supported = supported
        super().__init__(f"model format version {found} is not supported (expected {supported})")
