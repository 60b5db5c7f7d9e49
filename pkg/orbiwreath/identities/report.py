from json import dump, load

from ..rationals import format_rational, to_fraction
from ..series import RationalSeries, series_equal


class VerificationReport(object):
    """
    Outcome of comparing both sides of an identity up to q^T

    The verdict is 'pass' exactly when every coefficient agrees.

    :Example:

    report = verify('thm-es', GroupPresentation.free_abelian(1), point, 5)
    report.passed   #=> True
    report.to_dict()['rhs']  #=> ['1', '1', '1', '1', '1', '1']
    """

    def __init__(self, theorem, truncation, lhs, rhs, invariant=None, stats=None):
        self.theorem = theorem
        self.truncation = truncation
        self.lhs = lhs if isinstance(lhs, RationalSeries) else RationalSeries(lhs, truncation)
        self.rhs = rhs if isinstance(rhs, RationalSeries) else RationalSeries(rhs, truncation)
        self.invariant = invariant
        self.stats = dict(stats or {})
        self.comparison = series_equal(self.lhs, self.rhs)

    @property
    def passed(self):
        return bool(self.comparison)

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    @property
    def mismatch(self):
        """ {'index', 'lhs', 'rhs'} of the first differing coefficient, or None """
        if self.passed:
            return None
        c = self.comparison
        return {'index': c.index, 'lhs': format_rational(c.lhs), 'rhs': format_rational(c.rhs)}

    def to_dict(self):
        result = {'theorem': self.theorem,
                  'T': self.truncation,
                  'lhs': self.lhs.to_json(),
                  'rhs': self.rhs.to_json(),
                  'verdict': self.verdict,
                  'stats': {'homs_enumerated': self.stats.get('homs_enumerated', 0),
                            'classes': self.stats.get('classes', 0),
                            'wall_ms': self.stats.get('wall_ms', 0)}}
        if self.invariant is not None:
            result['invariant'] = str(self.invariant)
        if not self.passed:
            result['mismatch'] = self.mismatch
        return result

    @classmethod
    def from_dict(cls, data):
        return cls(data['theorem'], data['T'], [to_fraction(c) for c in data['lhs']],
                   [to_fraction(c) for c in data['rhs']], invariant=data.get('invariant'),
                   stats=data.get('stats'))

    def save(self, file='report.json'):
        """
        Save the report as JSON

        :param file: file path

        :Example:

        report.save('thm-es.json')
        """
        with open(file, 'w') as f:
            dump(self.to_dict(), f, indent=4, sort_keys=True)

    @classmethod
    def load(cls, file='report.json'):
        """
        Loads a report saved with save

        :param file: file path
        :rtype: VerificationReport
        """
        with open(file, 'r') as f:
            return cls.from_dict(load(f))

    def __str__(self):
        lines = ['{} (T={}{}): {}'.format(self.theorem, self.truncation,
                                          ', {}'.format(self.invariant) if self.invariant else '',
                                          self.verdict.upper()),
                 '  lhs: {}'.format(' '.join(self.lhs.to_json())),
                 '  rhs: {}'.format(' '.join(self.rhs.to_json()))]
        if not self.passed:
            m = self.mismatch
            lines.append('  first mismatch at q^{}: {} != {}'.format(m['index'], m['lhs'], m['rhs']))
        return '\n'.join(lines)

    def __repr__(self):
        return '#<VerificationReport: {} {}>'.format(self.theorem, self.verdict)
