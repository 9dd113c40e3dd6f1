#!/usr/bin/env python
import os
import re

from setuptools import setup

# The package imports numpy, so read the version without importing it.
with open(os.path.join(os.path.dirname(__file__) or '.',
        'majoranastates', '__init__.py')) as init:
    version_info = re.search(r'__version_info__ = \(([^)]*)\)', init.read())
version = '.'.join(part.strip() for part in version_info.group(1).split(','))

setup(
    name='majoranastates',
    packages=[
        'majoranastates'
        ],

    version=version,
    description='Majorana representation of symmetric multiqubit states',
    author='majoranastates contributors',

    keywords=['quantum', 'entanglement', 'majorana', 'qubits', 'slocc'],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
        ],

    zip_safe=False,
    python_requires='>=3.8',

    entry_points={
        'console_scripts': [
            'majoranastates=majoranastates.cli:main',
            ],
        },

    # Testing and documentation requirements can be installed with:
    # pip install -r dev-requirements.txt
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.4',
        ]

    )
