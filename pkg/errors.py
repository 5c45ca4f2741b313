EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_RESOURCE = 4


class RieszTauError(Exception):
    exit_code = 1


class UsageError(RieszTauError):
    exit_code = EXIT_USAGE


class ArgumentError(RieszTauError, ValueError):
    exit_code = EXIT_USAGE


class DomainError(RieszTauError, ValueError):
    exit_code = EXIT_USAGE


class NumericalError(RieszTauError):
    exit_code = EXIT_NUMERICAL


class AccuracyError(NumericalError):
    def __init__(self, message, previous=None, latest=None):
        super().__init__(message)
        self.previous = previous
        self.latest = latest


class NumericalBreakdownError(NumericalError):
    pass


class DefinitenessError(NumericalError):
    pass


class SingularPreconditionerError(NumericalError):
    pass


class ResourceError(RieszTauError):
    exit_code = EXIT_RESOURCE


def check_dense_cap(size: int, cap: int):
    if size > cap:
        raise ResourceError(
            f"Dense assembly of size {size} exceeds the configured cap of {cap}"
        )
