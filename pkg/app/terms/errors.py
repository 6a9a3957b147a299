"""Domain errors for the intersection-number assembly."""


class OutOfRangeError(ValueError):
    """Requested (g, N) lies outside the range the calculus covers."""

    def __init__(self, g: int, n: int, reason: str):
        self.g = g
        self.n = n
        super().__init__(f"(g={g}, N={n}) out of range: {reason}")
