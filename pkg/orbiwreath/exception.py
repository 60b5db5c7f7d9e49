class Error(Exception):
    pass


class ConfigError(Error):
    pass


class ConsistencyError(Error):
    pass


# group construction

class NotAGroup(Error):
    def __init__(self, message, witness=None):
        super(NotAGroup, self).__init__(message)
        self.witness = witness


class DegreeMismatch(Error):
    pass


class GroupMismatch(Error):
    pass


# caps

class CapExceeded(Error):
    def __init__(self, message, size=None, cap=None):
        super(CapExceeded, self).__init__(message)
        self.size = size
        self.cap = cap


class OrderCapExceeded(CapExceeded):
    pass


class SearchCapExceeded(CapExceeded):
    pass


class SizeCapExceeded(CapExceeded):
    pass


# presentations

class BadLetter(Error):
    pass


class InvalidHomomorphism(Error):
    pass


class TargetNotWreath(Error):
    pass


class UnsupportedSource(Error):
    pass


class SourceNotFinite(Error):
    pass


# descriptors

class MissingClass(Error):
    pass


class DuplicateClass(Error):
    pass


class ConjugacyConflict(Error):
    pass


class InvalidAction(Error):
    pass


class NotCentralizing(Error):
    pass


class NotNormalizing(Error):
    pass


class NonIntegerResult(Error):
    pass


# series

class BadConstantTerm(Error):
    pass
