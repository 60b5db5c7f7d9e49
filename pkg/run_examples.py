import sys
from glob import glob
from json import load
from os.path import dirname, join

from orbiwreath.cli import main

failed = []
for path in sorted(glob(join(dirname(__file__) or '.', 'docs', 'examples', '*.json'))):
    with open(path) as f:
        run = load(f)['run']
    print('== {}: {}'.format(path, ' '.join(run)))
    if main(run + ['--config', path]) != 0:
        failed.append(path)

if failed:
    print('failed: {}'.format(', '.join(failed)))
    sys.exit(1)
