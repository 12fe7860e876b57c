#!/usr/bin/env python3

"""Setup script for the python-ghalg package."""

# Copyright © 2019 Timothy Pederick.
#
# This file is part of python-ghalg.
#
# python-ghalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# python-ghalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with python-ghalg. If not, see <http://www.gnu.org/licenses/>.

# Use setuptools rather than distutils.
from setuptools import setup, find_packages

setup(
    name='python-ghalg',
    version='0.1',
    description=('python-ghalg: exact Gorenstein homological algebra for '
                 'finite-dimensional algebras.'),
    long_description=open('README.rst', 'rt', encoding='utf-8').read(),
    author='Timothy Pederick',
    author_email='pederick@gmail.com',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 or later '
        '(GPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics'
        ],
    python_requires='>=3.8',
    install_requires=['sympy'],
    packages=find_packages('src'),
    package_dir={'': 'src'},
    package_data={'ghalg.cli': ['corpus/*.gsession']},
    entry_points={'console_scripts': ['ghalg = ghalg.cli:main']}
    )
