from setuptools import setup, find_packages

setup(
    name='fuzzysigma',
    version='0.1.0',
    description='ファジィグラフの sigma 指数と主張の検証',
    packages=find_packages(),
    install_requires=[
        'numpy',
    ],
    extras_require={
        'test': [
            'pytest',
            'hypothesis',
            'networkx',
        ],
    },
    entry_points={
        'console_scripts': [
            'fuzzysigma=fuzzysigma.__main__:main',
        ],
    },
)
