class HypothesisError(ValueError):
    """
    Raised when the hypotheses of a kernel or freeness statement fail at a
    degree. The offending degree and a short reason are kept so that callers
    can report which l or m broke the statement.
    """
    def __init__(self, message, degree=None, reason=None):
        """
        :param message: One-line diagnostic.
        :type message: str
        :param degree: The degree at which the hypothesis failed.
        :type degree: DegreeVector or None
        :param reason: "P_m(q) != 0", "P_l(q) == 0 for l < m",
            "infinite order" or "ord(Q_m(q)) does not divide N(m)".
        :type reason: str or None
        """
        super(HypothesisError, self).__init__(message)

        self.degree = degree
        self.reason = reason

    def to_dict(self):
        return {"error": str(self),
                "reason": self.reason,
                "degree": None if self.degree is None
                else list(self.degree.as_tuple())}
