"""Exception types.

Every diagnostic carries the offending tuple in ``witness`` so callers (and
the report writer) can show a concrete counterexample.
"""


class LatdualError(ValueError):
    def __init__(self, message="", witness=None):
        super().__init__(message or self.__class__.__name__)
        self.witness = witness


# order structure
class NotAPoset(LatdualError):
    pass


class NoLub(LatdualError):
    pass


class NoGlb(LatdualError):
    pass


class Unbounded(LatdualError):
    pass


class NonDistributive(LatdualError):
    pass


class NotMonotone(LatdualError):
    pass


class BreaksJoin(LatdualError):
    pass


class BreaksMeet(LatdualError):
    pass


class BreaksBounds(LatdualError):
    pass


class SizeBound(LatdualError):
    pass


# filters
class ImproperFilter(LatdualError):
    pass


class NotPrime(LatdualError):
    pass


class NotAntichain(LatdualError):
    pass


class EmptySet(LatdualError):
    pass


# topology
class MissingEmpty(LatdualError):
    pass


class MissingFull(LatdualError):
    pass


class NotClosedUnderUnion(LatdualError):
    pass


class NotClosedUnderIntersection(LatdualError):
    pass


class InvalidBase(LatdualError):
    pass


class DoesNotGenerate(InvalidBase):
    pass


class NotClosedUnderOps(InvalidBase):
    pass


class NotClosedSets(LatdualError):
    pass


# functors
class NotT1(LatdualError):
    pass


class NotContinuous(LatdualError):
    pass


class NotClosedMap(LatdualError):
    pass


class NotClosedSubfit(LatdualError):
    pass


class SourceNotNormal(LatdualError):
    pass


class NotWeakNormal(LatdualError):
    pass


class NotSubfit(LatdualError):
    pass


class NotLarge(LatdualError):
    pass


# documents
class ParseError(LatdualError):
    pass


class KindMismatch(LatdualError):
    pass
