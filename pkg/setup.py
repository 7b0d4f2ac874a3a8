from sys import version_info
from setuptools import find_packages, setup

if version_info.major == 3 and version_info.minor < 7 or \
        version_info.major < 3:
    print('Your Python interpreter must be 3.7 or greater!')
    exit(1)

from zhomology import __version__

# Requirements used for submodules
plot = ['matplotlib>=3.1']

develop = [
    'flake8',
    'flake8-type-annotations',
    'flake8-tidy-imports',
    'mypy',
    'pytest',
    'pytest-cov',
    'pytest-mock',
    'pytest-random-order',
    'sympy',
]

all_extra = plot + develop

setup(name='zhomology',
      version=__version__,
      description='Integer persistent homology and spectral sequences of filtered complexes',
      license='GPLv3',
      packages=find_packages(exclude=["*.tests", "*.tests.*"]),
      setup_requires=['pytest-runner', 'numpy'],
      tests_require=['pytest', 'pytest-mock', 'pytest-cov'],
      install_requires=[
          # from requirements-common.txt
          'cachetools',
          'jsonschema',
          'tabulate',
          'python-rapidjson',
          # from requirements.txt
          'numpy',
      ],
      extras_require={
          'dev': all_extra,
          'plot': plot,
          'all': all_extra,
      },
      include_package_data=True,
      zip_safe=False,
      entry_points={
          'console_scripts': [
              'zhomology = zhomology.main:main',
          ],
      },
      classifiers=[
          'Programming Language :: Python :: 3.7',
          'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
          'Topic :: Scientific/Engineering :: Mathematics',
          'Intended Audience :: Science/Research',
      ])
