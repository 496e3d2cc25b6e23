class KernelReport(object):
    """
    The kernel dimension of the shuffle map S_{1,|m|-1} on V_m at a minimal
    degenerate degree m, from the Lyndon sums n1 - n2 and optionally by
    elimination.
    """
    def __init__(self, m, d, d_prime, n1, n2, kernel_dim_bruteforce=None,
                 relation_dim=None):
        """
        :param m: The degree.
        :type m: DegreeVector
        :param d: Order of Q_m(q).
        :param d_prime: N(m)/d.
        :param n1: Lyndon sum over the degrees m - e_i.
        :param n2: Lyndon sum over the divisors of m.
        :param kernel_dim_bruteforce: dim ker S_{1,|m|-1}|V_m by elimination.
        :param relation_dim: dim ker S_m|V_m by elimination.
        """
        if n1 < n2:
            raise ValueError("n1 = %d is smaller than n2 = %d." % (n1, n2))

        self.m = m
        self.d = d
        self.d_prime = d_prime
        self.n1 = n1
        self.n2 = n2
        self.kernel_dim_bruteforce = kernel_dim_bruteforce
        self.relation_dim = relation_dim

    @property
    def kernel_dim_formula(self):
        return self.n1 - self.n2

    def is_consistent(self):
        """
        :return: Whether every computed dimension equals n1 - n2.
        """
        return all(value == self.kernel_dim_formula
                   for value in (self.kernel_dim_bruteforce,
                                 self.relation_dim)
                   if value is not None)

    def to_dict(self):
        return {"m": list(self.m.as_tuple()),
                "d": self.d,
                "d_prime": self.d_prime,
                "n1": self.n1,
                "n2": self.n2,
                "kernel_dim_formula": self.kernel_dim_formula,
                "kernel_dim_bruteforce": self.kernel_dim_bruteforce,
                "relation_dim": self.relation_dim}

    def __repr__(self):
        return "KernelReport(m=%s, n1=%d, n2=%d)" % (self.m, self.n1,
                                                     self.n2)
