class GivingGameError(Exception):
    """Base class for errors raised by this package."""


class IllegalStep(GivingGameError, ValueError):
    """A pass that the game rules forbid."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message if step is None else f"step {step}: {message}")
        self.step = step


class ScriptError(IllegalStep):
    """A scripted policy ran out of choices or named a non-blue receiver."""


class BranchExplosion(GivingGameError):
    def __init__(self, cap: int):
        super().__init__(f"branch explosion: more than {cap} branches")
        self.cap = cap


class CycleExplosion(GivingGameError):
    def __init__(self, cap: int):
        super().__init__(f"cycle explosion: more than {cap} elementary cycles")
        self.cap = cap


class StabilityNotReached(GivingGameError):
    """The trace ends before its first stability-phase step."""

    def __init__(self, message: str = "stability not reached"):
        super().__init__(message)
