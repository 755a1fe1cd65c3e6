#!/usr/bin/env python3

import os
from setuptools import setup, find_packages
import affinelogic

with open("requirements.txt") as fin:
    REQUIRED_PACKAGES = fin.read()

about = {
    '__title__': 'affinelogic',
    '__description__': 'affine integration logic over finite charged metric structures',
    '__version__': affinelogic.__version__
}  # type: ignore
here = os.path.abspath(os.path.dirname(__file__))

long_description = 'affinelogic implements affine continuous logic with an integration quantifier: \
formula syntax with Lipschitz constants and bounds, exact evaluation over finite charged metric structures, \
ultrameans, a proof kernel, a mixture solver over finite model families and type functionals.'

setup(
    name=about['__title__'],
    description=about['__description__'],
    long_description=long_description,
    long_description_content_type='text/plain',
    version=about['__version__'],
    packages=find_packages(exclude=('tests', 'tests.*', 'examples', 'examples.*')),
    package_data={'affinelogic.proof': ['fixtures/*.alpf', 'fixtures/mutants/*.alpf']},
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=REQUIRED_PACKAGES,
    license='Apache 2.0',
    zip_safe=False,
    entry_points={
        'console_scripts': ['affinelogic=affinelogic.command:main'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.8',
    ],
    keywords='continuous logic metric structures proof checking')
