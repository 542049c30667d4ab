"""Exception types shared across the package."""


class HallqError(Exception):
    """Base class for all library errors."""


class NonPrime(HallqError, ValueError):
    pass


class TooLarge(HallqError, ValueError):
    pass


class BudgetExceeded(HallqError):
    """An enumeration would visit more than the configured number of items."""

    def __init__(self, cost, budget=None, what="enumeration"):
        self.cost = cost
        self.budget = budget
        self.what = what
        msg = f"{what} needs {cost} items"
        if budget is not None:
            msg += f" (budget {budget})"
        super().__init__(msg)


class UnknownPreset(HallqError, ValueError):
    pass


class BadParams(HallqError, ValueError):
    pass


class BadLabel(HallqError, ValueError):
    pass


class PresetMismatch(HallqError, ValueError):
    pass


class FieldMismatch(HallqError, ValueError):
    pass


class NotNilpotent(HallqError, ValueError):
    pass


class NotInCatalogue(HallqError):
    """A module has an indecomposable summand outside the label families."""


class CertificationFailed(HallqError):
    pass


class CyclicPresetDirectUse(HallqError):
    pass


class UnsupportedRank(HallqError, ValueError):
    pass


class NoFit(HallqError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class SpuriousPole(NoFit):
    pass


class ParseError(HallqError, ValueError):
    pass
