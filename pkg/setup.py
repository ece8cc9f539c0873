from setuptools import setup
from setuptools import find_packages

setup(
    name='doomsday',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy>=1.17',
        'click',
        'argcomplete',
        'pyyaml',
        'networkx'],
    extras_require={
        'tests': ['pytest', 'pytest-pep8', 'pytest-cov', 'mock']
    },
    include_package_data=True,
    license='Apache',
    description='Decide, certify and check doomsday equilibria of multi-player games on graphs',
    long_description='Decide, certify and check doomsday equilibria of multi-player games on graphs',
    entry_points={
        'console_scripts': [
            'doomsday=doomsday.cli:handle'
        ]
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Environment :: Console',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
