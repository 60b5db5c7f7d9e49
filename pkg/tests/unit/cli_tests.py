import json

import pytest
from six import StringIO

from orbiwreath.cli import EXIT_CAP, EXIT_CONFIG, EXIT_MISMATCH, EXIT_PASS, build_parser, main
from orbiwreath.groups import symmetric

Z_OVER_Z2 = {'gamma': {'kind': 'free_abelian', 'rank': 1}, 'group': {'kind': 'cyclic', 'n': 2},
             'space': {'kind': 'point'}, 'truncation': 3}


def run(argv):
    out = StringIO()
    code = main(argv, stream=out)
    return code, out.getvalue()


class TestParser(object):
    def test_needs_a_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_needs_a_config(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(['verify', 'thm-es'])

    def test_rejects_unknown_theorems(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(['verify', 'thm-none', '--config', 'run.json'])

    def test_reads_overrides(self):
        args = build_parser().parse_args(['compute', 'lhs', '--config', 'run.json', '--truncation', '4',
                                          '--cap-order', '100', '-vv'])
        assert args.what == 'lhs'
        assert args.truncation == 4
        assert args.cap_order == 100
        assert args.verbose == 2


class TestVerifyCommand(object):
    def test_passing_identity_exits_zero(self, write_config, tmpdir):
        path = write_config(Z_OVER_Z2)
        report_path = str(tmpdir.join('report.json'))
        code, out = run(['verify', 'thm-es', '--config', path, '--json', report_path])
        assert code == EXIT_PASS
        assert out.startswith('thm-es (T=3, euler_satake): PASS')
        with open(report_path) as f:
            report = json.load(f)
        assert report['verdict'] == 'pass'
        assert report['rhs'] == ['1', '1', '1', '1']

    def test_run_releases_shared_symmetric_groups(self, write_config):
        held = symmetric(3)
        held.cache['marker'] = True
        code, _ = run(['verify', 'thm-es', '--config', write_config(Z_OVER_Z2)])
        assert code == EXIT_PASS
        assert held.cache == {}
        assert symmetric(3) is not held

    def test_mismatch_exits_one(self, write_config):
        data = dict(Z_OVER_Z2, abstract={'invariant': 'euler', 'entries': {'1': [['Z', 1, '1', None]]}})
        code, out = run(['verify', 'thm-euler', '--config', write_config(data)])
        assert code == EXIT_MISMATCH
        assert 'first mismatch at q^1: 2 != 1' in out

    def test_bad_config_exits_two(self, write_config):
        code, _ = run(['verify', 'thm-es', '--config', write_config(dict(Z_OVER_Z2, truncation=99))])
        assert code == EXIT_CONFIG

    def test_missing_config_exits_two(self, tmpdir):
        code, _ = run(['verify', 'thm-es', '--config', str(tmpdir.join('missing.json'))])
        assert code == EXIT_CONFIG

    def test_cap_exceeded_exits_three(self, write_config):
        data = dict(Z_OVER_Z2, group={'kind': 'symmetric', 'n': 3})
        code, _ = run(['verify', 'thm-es', '--config', write_config(data), '--cap-order', '5'])
        assert code == EXIT_CAP

    def test_truncation_override(self, write_config):
        code, out = run(['verify', 'thm-euler', '--config', write_config(Z_OVER_Z2), '--truncation', '2'])
        assert code == EXIT_PASS
        assert '  lhs: 1 2 5' in out


class TestComputeCommand(object):
    def test_extension(self, write_config, tmpdir):
        data = {'gamma': {'kind': 'free_abelian', 'rank': 2}, 'group': {'kind': 'symmetric', 'n': 3}}
        json_path = str(tmpdir.join('extension.json'))
        code, out = run(['compute', 'extension', '--config', write_config(data), '--json', json_path])
        assert code == EXIT_PASS
        assert out.splitlines()[0] == '3'
        with open(json_path) as f:
            result = json.load(f)
        assert result['value'] == '3'
        assert len(result['terms']) == 8

    def test_wreath_extension(self, write_config):
        data = dict(Z_OVER_Z2, invariant='euler', options={'degree': 3})
        code, out = run(['compute', 'extension', '--config', write_config(data)])
        assert out.splitlines()[0] == '10'

    def test_lhs_and_rhs(self, write_config):
        path = write_config(dict(Z_OVER_Z2, invariant='euler'))
        assert run(['compute', 'lhs', '--config', path])[1] == '1 2 5 10\n'
        assert run(['compute', 'rhs', '--config', path])[1] == '1 2 5 10\n'

    def test_master_product(self, write_config):
        path = write_config(dict(Z_OVER_Z2, invariant='euler', options={'master': True}))
        assert run(['compute', 'rhs', '--config', path])[1] == '1 2 5 10\n'

    def test_subgroup_counts(self, write_config):
        path = write_config({'gamma': {'kind': 'free', 'rank': 2}, 'truncation': 4})
        assert run(['compute', 'subgroup-counts', '--config', path])[1] == '1 1\n2 3\n3 13\n4 71\n'

    def test_subgroup_counts_of_a_presented_group(self, write_config):
        path = write_config({'gamma': {'kind': 'presented', 'rank': 1, 'relators': [[1, 1]]}, 'truncation': 3})
        assert run(['compute', 'subgroup-counts', '--config', path])[1] == '1 1\n2 1\n3 0\n'

    def test_group_info(self, write_config):
        path = write_config({'group': {'kind': 'wreath', 'base': {'kind': 'cyclic', 'n': 2}, 'n': 2}})
        code, out = run(['compute', 'group-info', '--config', path])
        assert code == EXIT_PASS
        assert 'order: 8' in out
        assert 'classes: 5' in out
        assert 'abelian: False' in out

    def test_sectors(self, write_config):
        path = write_config(dict(Z_OVER_Z2, truncation=2))
        code, out = run(['compute', 'sectors', '--config', path])
        assert code == EXIT_PASS
        assert len(out.splitlines()) == 5
