import sys

from setuptools import setup, find_packages
from fvscaling import __version__

py_version = sys.version_info[:2]
if py_version < (3, 9):
    raise Exception("fvscaling requires Python >= 3.9.")

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fh:
    install_requires = [line.strip() for line in fh if line.strip() and not line.startswith(('-', '#'))]

setup(name='fvscaling',
      version=__version__,
      packages=find_packages(exclude=['tests', 'tests.*']),
      include_package_data=True,
      description="Finite volume solver for scalar balance laws, with a scaling-function iteration that "
                  "freezes the source term and a MUSCL-Hancock reference solver to measure its accuracy.",
      long_description=long_description,
      long_description_content_type="text/markdown",
      test_suite='tests',
      install_requires=install_requires,
      keywords=['finite volume', 'balance law', 'hyperbolic', 'FORCE', 'MUSCL-Hancock', 'Burgers',
                'traffic flow', 'source term'],
      classifiers=[
          "Programming Language :: Python :: 3.9",
          "Intended Audience :: Science/Research",
          "Topic :: Scientific/Engineering :: Mathematics",
          "Operating System :: OS Independent",
      ],
      python_requires='>=3.9',
      entry_points='''
        [console_scripts]
        fvscaling=fvscaling.cli:run_cli
      ''')
