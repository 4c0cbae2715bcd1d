#!/usr/bin/env python

"""
This file is part of PyMajority.

PyMajority is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

PyMajority is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with PyMajority.  If not, see <http://www.gnu.org/licenses/>.
"""

import os
import re
import sys
from setuptools import setup


def get_version():

	# read the version without importing the package (numpy may be missing)
	with open(os.path.join('pymajority', '__init__.py')) as fd:
		return re.search(r'__version__ = version = "([^"]+)"', fd.read()).group(1)


def get_readme():

	if os.path.exists('README.md'):
		with open('README.md') as fd:
			return fd.read()
	return 'No readme information'


print("Running setup for PyMajority version {}".format(get_version()))

setup(
	name='pymajority' if 'bdist_deb' in sys.argv else u'pymajority',
	python_requires=">=3.7",
	version=get_version(),
	description="Finite models for majority and Mal'tsev conditions",
	long_description=get_readme(),
	long_description_content_type='text/markdown',
	classifiers=[
		'Development Status :: 4 - Beta',
		'Intended Audience :: Science/Research',
		'Topic :: Scientific/Engineering :: Mathematics',
		'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
		'Programming Language :: Python :: 3',
	],
	install_requires=[
		"numpy",
	],
	extras_require={
		"tests": ["pytest", "hypothesis"],
	},
	include_package_data=True,
	package_data={
		"pymajority": ["data/*.txt"],
	},
	packages=[
		"pymajority",
		"pymajority._closure",
		"pymajority._congruence",
		"pymajority._logfile",
		"pymajority._misc",
	],
	entry_points={
		"console_scripts": ["pymajority = pymajority.cli:main"],
	},
)
