from __future__ import annotations


class MuposetError(RuntimeError):
    pass


class PermutationError(MuposetError, ValueError):
    pass


class IntervalTooLargeError(MuposetError):
    def __init__(self, *, length: int, limit: int) -> None:
        self.length = length
        self.limit = limit
        super().__init__(
            f"interval too large: host has length {length}, oracle limit is {limit}"
        )


class OutOfClassError(MuposetError):
    pass


class FormulaDomainError(MuposetError, ValueError):
    pass
