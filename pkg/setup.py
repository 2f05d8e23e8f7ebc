#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright threestage developers
# Distributed under the terms of the GNU General Public License

# --------------------------------------------------------------------
# threestage is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# threestage is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with threestage.  If not, see <http://www.gnu.org/licenses/>.
# --------------------------------------------------------------------


from setuptools import setup, find_packages

from threestage import VERSION

with open("README.md", "r", encoding='utf8') as readme_file:
    long_description = readme_file.read()

setup(
    name='threestage',
    version=VERSION,
    author='threestage developers',
    description='Seeded simulator of the three-stage quantum cryptography'
    ' protocol, its key distribution variants and eavesdropper models.',
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['*.test']),
    entry_points={
        'console_scripts': {
            'threestage = threestage.threestage:main'
        }
    },
    license='GPL v3 :: GNU General Public License',
    keywords=['quantum cryptography', 'three-stage protocol', 'simulation'],
    python_requires='>=3.8',
    install_requires=['numpy (>=1.17)',
                      'scipy (>=1.5)',
                      'packaging (>=20.0)',
                      'setuptools (>=40.0)'],
    extras_require={
        'test': ['pytest (>=6.0)'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Security :: Cryptography',
    ],
)
