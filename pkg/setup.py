from setuptools import setup, find_namespace_packages

setup(
    name='qrac-lab',
    version='0.1.0',
    description='Random access codes, quantum finite automata and the bounds relating them',
    author='qrac-lab contributors',
    license="",
    packages=find_namespace_packages(include=['qrac_lab*']),
    package_data={'qrac_lab': ['default_config.ini']},
    python_requires='>=3.10',
    install_requires=[
        "numpy>=2.0",
        "scipy>=1.11"
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0"
        ]
    },
    entry_points={
        "console_scripts": [
            "qrac-lab=qrac_lab.cli.main:main"
        ]
    },
    classifiers=[""]
)
