#!/usr/bin/env python

from os.path import abspath, dirname, join

from setuptools import setup

setup_args = {
    'name': 'orbiwreath',
    'version': '0.1.0',
    'license': 'MIT',
    'description': 'Gamma-sector extensions of orbifold Euler characteristics for wreath symmetric products',
    'long_description': open(join(abspath(dirname(__file__)), 'README.rst')).read(),
    'classifiers': ['Intended Audience :: Science/Research',
                    'Operating System :: OS Independent',
                    'Topic :: Scientific/Engineering :: Mathematics',
                    'Programming Language :: Python',
                    'Programming Language :: Python :: 2.7',
                    'Programming Language :: Python :: 3.6',
                    'Programming Language :: Python :: 3.7'],
    'install_requires': ['six', 'futures; python_version < "3"'],
    'package_dir': {'orbiwreath': 'orbiwreath'},
    'packages': ['orbiwreath',
                 'orbiwreath.groups',
                 'orbiwreath.gspace',
                 'orbiwreath.identities',
                 'orbiwreath.presentations',
                 'orbiwreath.sectors'],
    'entry_points': {
        'console_scripts': ['orbiwreath = orbiwreath.cli:main']
    },
    'zip_safe': False
}

setup(**setup_args)
