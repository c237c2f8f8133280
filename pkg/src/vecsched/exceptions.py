"""Exception types raised by the package."""


class IncompatibleAssignmentError(ValueError):
    """An assignment does not fit the instance it is evaluated against."""


class InstanceFormatError(ValueError):
    """An instance file could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NonAnchorAssignmentError(ValueError):
    """A job of a reduced instance sits on a non-anchor machine."""

    def __init__(self, job, machine):
        self.job = job
        self.machine = machine
        super().__init__(
            f"job {job} is assigned to non-anchor machine {machine} "
            f"(partition {machine[0]}, dimension {machine[1]}); its load is infinite"
        )


class InfeasibleJobError(RuntimeError):
    """Every machine yields an infinite norm for some job."""


class BudgetExceededError(RuntimeError):
    """Brute-force enumeration would exceed the configured budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"exhaustive search needs {required} assignments, budget is {budget}"
        )
