class FreenessReport(object):
    """
    Result of a bounded freeness sweep: the values P_m(q) for
    2 <= |m| <= max_degree and the minimal degrees where they vanish.
    A "free-up-to-D" verdict says nothing about degrees above D.
    """
    FREE = "free-up-to-D"
    NOT_FREE = "not-free"

    def __init__(self, max_degree, witnesses, values, kernels=None):
        """
        :param max_degree: The degree bound D.
        :type max_degree: int
        :param witnesses: Minimal degrees m with P_m(q) = 0.
        :type witnesses: list(DegreeVector)
        :param values: (m, serialized P_m(q), is_zero) in sweep order.
        :type values: list(tuple)
        :param kernels: Optional KernelReport per witness.
        :type kernels: dict or None
        """
        self._max_degree = max_degree
        self._witnesses = list(witnesses)
        self._values = list(values)
        self._kernels = dict(kernels) if kernels else {}

        if any(not is_zero for m, value, is_zero in self._values
               if m in self._witnesses):
            raise ValueError("every witness must be a zero of P_m(q).")

    @property
    def max_degree(self):
        return self._max_degree

    @property
    def witnesses(self):
        return list(self._witnesses)

    @property
    def values(self):
        return list(self._values)

    @property
    def kernels(self):
        return dict(self._kernels)

    @property
    def verdict(self):
        if self._witnesses:
            return self.NOT_FREE
        return self.FREE

    def is_free(self):
        return not self._witnesses

    def add_kernel(self, report):
        self._kernels[report.m] = report

    def to_dict(self):
        result = {"max_degree": self._max_degree,
                  "verdict": self.verdict,
                  "witnesses": [list(m.as_tuple()) for m in self._witnesses],
                  "values": [{"m": list(m.as_tuple()), "value": value,
                              "zero": is_zero}
                             for m, value, is_zero in self._values]}

        if self._kernels:
            result["kernels"] = [self._kernels[m].to_dict()
                                 for m in self._witnesses
                                 if m in self._kernels]
        return result

    def __repr__(self):
        return "FreenessReport(D=%d, %s, witnesses=%s)" % \
            (self._max_degree, self.verdict,
             ", ".join(str(m) for m in self._witnesses))
