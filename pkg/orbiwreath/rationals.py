from fractions import Fraction

import six


def to_fraction(value):
    """
    Converts an int, Fraction or "p/q" string to a Fraction

    :param value: value to convert
    :rtype: fractions.Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('expected a rational, got {!r}'.format(value))
    if isinstance(value, six.integer_types):
        return Fraction(value)
    if isinstance(value, six.string_types):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError('not an exact rational: {!r}'.format(value))
    raise TypeError('expected a rational, got {!r}'.format(value))


def format_rational(value):
    """
    Formats an exact rational as reduced "p/q", or "n" when integral

    :Example:

    format_rational(Fraction(2, 4))  #=> '1/2'
    format_rational(Fraction(6, 3))  #=> '2'
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return '{}'.format(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)
