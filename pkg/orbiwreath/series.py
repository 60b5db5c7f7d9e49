from fractions import Fraction

from six.moves import range

from .exception import BadConstantTerm
from .rationals import format_rational, to_fraction


class RationalSeries(object):
    """
    Truncated power series a_0 + a_1 q + ... + a_T q^T with exact rational coefficients

    Binary operations truncate to the smaller of the two truncations.

    :Example:

    f = RationalSeries([1, 1], 2)
    (f * RationalSeries([1, -1], 2)).coefficients  #=> (1, 0, -1)
    """

    def __init__(self, coefficients, truncation=None):
        coefficients = [to_fraction(c) for c in coefficients]
        if truncation is None:
            truncation = max(len(coefficients) - 1, 0)
        if truncation < 0:
            raise ValueError('truncation must be non-negative, got {}'.format(truncation))
        coefficients = coefficients[:truncation + 1]
        coefficients.extend([Fraction(0)] * (truncation + 1 - len(coefficients)))
        self.truncation = truncation
        self.coefficients = tuple(coefficients)

    @classmethod
    def zero(cls, truncation):
        return cls([], truncation)

    @classmethod
    def one(cls, truncation):
        return cls([1], truncation)

    @classmethod
    def monomial(cls, degree, coefficient, truncation):
        """ coefficient * q^degree, or zero when degree exceeds the truncation """
        if degree > truncation:
            return cls.zero(truncation)
        return cls([0] * degree + [coefficient], truncation)

    @classmethod
    def from_function(cls, function, truncation):
        return cls([function(n) for n in range(truncation + 1)], truncation)

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return self.truncation + 1

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other):
        other = self._coerce(other)
        t = min(self.truncation, other.truncation)
        return RationalSeries([self[n] + other[n] for n in range(t + 1)], t)

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries([-c for c in self.coefficients], self.truncation)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return self.scale(other)
        t = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (t + 1)
        for i in range(t + 1):
            a = self[i]
            if a:
                for j in range(t + 1 - i):
                    out[i + j] += a * other[j]
        return RationalSeries(out, t)

    __rmul__ = __mul__

    def scale(self, c):
        c = to_fraction(c)
        return RationalSeries([c * x for x in self.coefficients], self.truncation)

    def derivative(self):
        """ Formal derivative; exact through q^(T-1) """
        t = max(self.truncation - 1, 0)
        return RationalSeries([n * self[n] for n in range(1, self.truncation + 1)], t)

    def truncate_to(self, truncation):
        if truncation > self.truncation:
            raise ValueError('cannot extend truncation {} to {}'.format(self.truncation, truncation))
        return RationalSeries(self.coefficients[:truncation + 1], truncation)

    def substitute_power(self, r):
        """ f(q^r), truncated at the same order """
        out = [Fraction(0)] * (self.truncation + 1)
        for n, c in enumerate(self.coefficients):
            if n * r > self.truncation:
                break
            out[n * r] = c
        return RationalSeries(out, self.truncation)

    def exp(self):
        return exp_series(self)

    def log(self):
        return log_series(self)

    def __eq__(self, other):
        return isinstance(other, RationalSeries) and self.truncation == other.truncation \
            and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return '#<RationalSeries: [{}] + O(q^{})>'.format(', '.join(self.to_json()), self.truncation + 1)

    def to_json(self):
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, values):
        return cls(values)

    # private

    def _coerce(self, other):
        if isinstance(other, RationalSeries):
            return other
        return RationalSeries([other], self.truncation)


class Comparison(object):
    """ Result of series_equal; truthy when the series agree """

    def __init__(self, equal, index=None, lhs=None, rhs=None):
        self.equal = equal
        self.index = index
        self.lhs = lhs
        self.rhs = rhs

    def __bool__(self):
        return self.equal

    __nonzero__ = __bool__

    def __repr__(self):
        if self.equal:
            return '#<Comparison: equal>'
        return '#<Comparison: q^{} {} != {}>'.format(self.index, format_rational(self.lhs), format_rational(self.rhs))


def series_equal(f, g):
    """
    Exact coefficient comparison up to the smaller truncation

    :rtype: Comparison
    """
    t = min(f.truncation, g.truncation)
    for n in range(t + 1):
        if f[n] != g[n]:
            return Comparison(False, n, f[n], g[n])
    return Comparison(True)


def exp_series(f):
    """
    exp(f) for a_0 = 0, from n F_n = sum_{k=1}^n k f_k F_{n-k}

    :raises: BadConstantTerm
    """
    if f[0] != 0:
        raise BadConstantTerm('exp needs constant term 0, got {}'.format(format_rational(f[0])))
    t = f.truncation
    out = [Fraction(1)] + [Fraction(0)] * t
    for n in range(1, t + 1):
        out[n] = sum((k * f[k] * out[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return RationalSeries(out, t)


def log_series(f):
    """
    log(f) for a_0 = 1, from n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}

    :raises: BadConstantTerm
    """
    if f[0] != 1:
        raise BadConstantTerm('log needs constant term 1, got {}'.format(format_rational(f[0])))
    t = f.truncation
    out = [Fraction(0)] * (t + 1)
    for n in range(1, t + 1):
        out[n] = f[n] - sum((k * out[k] * f[n - k] for k in range(1, n)), Fraction(0)) / n
    return RationalSeries(out, t)


def geom_power(r, c, truncation):
    """
    (1 - q^r)^(-c) = exp(c * sum_k q^(rk)/k), exact for rational c

    :Example:

    geom_power(2, 2, 4).coefficients  #=> (1, 0, 2, 0, 3)
    """
    if r < 1:
        raise ValueError('r must be positive, got {}'.format(r))
    c = to_fraction(c)
    inner = [Fraction(0)] * (truncation + 1)
    k = 1
    while r * k <= truncation:
        inner[r * k] = c / k
        k += 1
    return exp_series(RationalSeries(inner, truncation))


def product_family(factors, truncation):
    """ Exact product of finitely many series; the empty product is 1 """
    result = RationalSeries.one(truncation)
    for f in factors:
        result = result * f
    return result


def egf(values, truncation):
    """ sum_n values[n] q^n / n! """
    out = []
    factorial = 1
    for n in range(truncation + 1):
        if n:
            factorial *= n
        out.append(to_fraction(values[n]) / factorial)
    return RationalSeries(out, truncation)
