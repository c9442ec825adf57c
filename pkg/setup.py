import os

from setuptools import setup, find_packages

exec(open('consensus/version.py').read())

def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname), encoding='utf8').read()

setup(
    name='interval-consensus',
    version=__version__,
    install_requires=[
        'numpy>=1.20',
        'pandas>=1.5',
        'scipy',
        'networkx'
    ],
    extras_require={
        'docs': [
            'sphinx',
            'sphinx-autobuild',
            'recommonmark',
            'sphinx_rtd_theme',
            'jupyter_sphinx_theme'
        ],
        'test': [
            'mock',
            'pytest',
        ]
    },
    entry_points={
        'console_scripts': [
            'consensus = consensus.cli:main',
        ]
    },
    description='Simulation and spectral analysis of binary interval consensus on weighted graphs.',
    license='Apache License 2.0',
    keywords='consensus, gossip, majority, continuous-time Markov chains, spectral bounds',
    packages=find_packages(exclude=['tests']),
    long_description=read('README.rst'),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
    ]
)
