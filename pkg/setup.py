#!/usr/bin/env python3

"""Eccentricity spectra of C-graphs."""

from setuptools import setup

setup(
    name='ecc-spectra',
    version='1.0.0',
    license='MIT',
    packages=[
        'eccspectra',
        'eccspectra.misc',
    ],
    package_dir={'': 'lib'},
    package_data={
        'eccspectra': ['data/table.json'],
    },
    scripts=['bin/ecc-spectra'],
    install_requires=[
        'numpy',
    ],
    python_requires='>=3.8',
    platforms=['Linux'],

    classifiers=[
        'Development Status :: 5 - Production/Stable',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3'
    ],

    keywords='graph spectra eccentricity matrix cograph',
    description='Eccentricity spectra of C-graphs from closed forms and '
                'direct computation',
    long_description='Computes eccentricity matrices of C-graphs, checks '
                     'the closed forms for their spectra, inertia and '
                     'eigenvalue-free intervals, and reproduces reference '
                     'tables.',
)
