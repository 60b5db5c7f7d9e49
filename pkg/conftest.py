import json
import tempfile

import pytest

import orbiwreath
from orbiwreath.groups import cyclic, symmetric
from orbiwreath.gspace import FiniteGSet, GSpaceDescriptor, descriptor_from_gset, descriptor_from_table
from orbiwreath.presentations import GroupPresentation

_CAP_ATTRS = ('order_cap', 'subgroup_cap', 'node_cap', 'gset_cap', 'associativity_cap', 'table_cap',
              'truncation_max', 'threads')


def pytest_addoption(parser):
    parser.addoption(
        '--threads',
        default=None,
        type=int,
        action='store',
        metavar='K',
        help='workers for homomorphism enumeration (default: all cores)')


def pytest_collection_modifyitems(session, config, items):
    """ called after collection has been performed, may filter or re-order the items in-place
    :param session: pytest session instance
    :param config: configuration of pytest
    :param items: items collected
    """
    orbiwreath.threads = config.getoption('--threads')


@pytest.fixture(autouse=True)
def caps_reset():
    """ Restores every module-level cap a test may have lowered """
    saved = dict((attr, getattr(orbiwreath, attr)) for attr in _CAP_ATTRS)
    yield
    for attr, value in saved.items():
        setattr(orbiwreath, attr, value)


@pytest.fixture
def default_logging_handling():
    orig = orbiwreath.logger.level
    ignored = orbiwreath.logger.ignored
    yield
    orbiwreath.logger.level = orig
    orbiwreath.logger.filename = None
    orbiwreath.logger.unignore(*[i for i in orbiwreath.logger.ignored if i not in ignored])


@pytest.fixture(scope='session')
def z2():
    return cyclic(2)


@pytest.fixture(scope='session')
def z3():
    return cyclic(3)


@pytest.fixture(scope='session')
def z4():
    return cyclic(4)


@pytest.fixture(scope='session')
def s3():
    return symmetric(3)


@pytest.fixture(scope='session')
def point_z2(z2):
    return GSpaceDescriptor.point(z2)


@pytest.fixture(scope='session')
def point_s3(s3):
    return GSpaceDescriptor.point(s3)


@pytest.fixture(scope='session')
def circle(z2):
    """ The circle with Z/2 acting by a reflection: chi(M) = 0, two fixed points """
    return descriptor_from_table(z2, [([], 0), ([1], 2)])


@pytest.fixture(scope='session')
def natural_s3(s3):
    return descriptor_from_gset(FiniteGSet.natural(s3))


@pytest.fixture(scope='session')
def z():
    return GroupPresentation.free_abelian(1)


@pytest.fixture(scope='session')
def z_squared():
    return GroupPresentation.free_abelian(2)


@pytest.fixture(scope='session')
def free2():
    return GroupPresentation.free(2)


@pytest.fixture(scope='session')
def trivial():
    return GroupPresentation.trivial()


@pytest.fixture
def temp_file():
    tmp = tempfile.NamedTemporaryFile()
    yield tmp
    tmp.close()


@pytest.fixture
def write_config(tmpdir):
    """ Writes a run config into tmpdir and returns its path """
    def write(data, name='run.json'):
        path = tmpdir.join(name)
        path.write(json.dumps(data))
        return str(path)
    return write
