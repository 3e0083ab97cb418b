#!/usr/bin/env python3

from setuptools import setup, find_packages

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('requirements.txt') as requirements_file:
    requirements = requirements_file.readlines()

with open('dev_requirements.txt') as dev_requirements_file:
    dev_requirements = dev_requirements_file.readlines()

setup(
    name='lpbc',
    version='0.1.0',
    description='Bicircular and lattice path matroids and the excluded '
                'minors for their intersection.',
    long_description=readme,
    long_description_content_type='text/markdown',
    license='MIT',
    install_requires=requirements,
    extras_require={
        'dev': dev_requirements
    },
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    entry_points={
        'console_scripts': [
            'lpbc = lpbc.cli:main',
        ]
    }
)
