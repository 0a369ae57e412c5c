class InvalidInputError(ValueError):
    """Arguments violate a documented precondition."""


class DegenerateVarianceError(ArithmeticError):
    """The plug-in variance estimate is not positive, so the statistic is undefined."""

    def __init__(self, message, d_n=None, sigma2_hat=None):
        super().__init__(message)
        self.d_n = d_n
        self.sigma2_hat = sigma2_hat


class EstimationFailedError(RuntimeError):
    """Every Monte Carlo replicate was degenerate."""


class ParseError(ValueError):
    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number
