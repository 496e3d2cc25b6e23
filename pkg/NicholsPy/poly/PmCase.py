class PmCase(object):
    """
    The case of the P_m definition a degree m falls into, with the witness
    indices. For the two-letter cases, i is the letter with the distinguished
    multiplicity (1, 2 or 3) and j the other one.
    """
    TAGS = ("single-letter", "one-plus-k", "two-plus-k", "(3,3)", "(3,4)",
            "(3,6)", "(4,4)", "generic")

    def __init__(self, tag, i=None, j=None, m_i=None, m_j=None):
        """
        :param tag: One of PmCase.TAGS.
        :param i: 1-based witness index i.
        :param j: 1-based witness index j (two-letter cases only).
        :param m_i: Multiplicity of letter i.
        :param m_j: Multiplicity of letter j.
        """
        if tag not in self.TAGS:
            raise ValueError("unknown P_m case '%s'." % tag)

        self._tag = tag
        self._i = i
        self._j = j
        self._m_i = m_i
        self._m_j = m_j

    @property
    def tag(self):
        return self._tag

    @property
    def number(self):
        """
        :return: Position of the case in the definition, 1 to 8.
        """
        return self.TAGS.index(self._tag) + 1

    @property
    def i(self):
        return self._i

    @property
    def j(self):
        return self._j

    @property
    def m_i(self):
        return self._m_i

    @property
    def m_j(self):
        return self._m_j

    def is_two_letter(self):
        return 2 <= self.number <= 7

    def to_dict(self):
        return {"tag": self._tag, "case": self.number, "i": self._i,
                "j": self._j, "m_i": self._m_i, "m_j": self._m_j}

    def __eq__(self, other):
        if not isinstance(other, PmCase):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return "PmCase(%r, i=%r, j=%r, m_i=%r, m_j=%r)" % \
            (self._tag, self._i, self._j, self._m_i, self._m_j)
