from setuptools import find_packages, setup

from hodgepack import __version__

setup(
    name='hodgepack',
    version=__version__,
    packages=find_packages(exclude=['examples', 'tests']),
    install_requires=[
        'loguru',
        'multimethod',
        'numpy',
        'pyyaml',
        'scipy',
        'sympy',
        'tqdm',
    ],
    extras_require={
        'tests': ['pytest'],
    },
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'hodgepack = hodgepack.launch:main',
        ],
    },
)
