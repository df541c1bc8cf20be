from setuptools import setup, find_packages


setup(
    name='disres',
    version='0.0.1',
    url='https://github.com/wjk376/disres',
    author='Jiankun Wang',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'loguru==0.7.2',
        'pydantic>=2.8.0',
        'sympy>=1.12',
        'lark>=1.1.9',
    ],
    extras_require={
        'tests': ['pytest>=7.4'],
    },
    entry_points={
        'console_scripts': ['disres=disres.cli:main'],
    },
    python_requires='>=3.9',
    platforms='any',
)
