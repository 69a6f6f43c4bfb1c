from setuptools import setup, find_packages

SETUP_METADATA = \
               {
    "name": "troplab",
    "description": "Ultra-discrete periodic Toda lattice, box-ball system and tropical Jacobian",
    "version": "1.0.0",
    "license": "MIT",
    "packages": find_packages(exclude=["test"]),
    "package_data": {"troplab": ["schemas/*.json"]},
    "entry_points": {'console_scripts': [
        'troplab = troplab.__main__:main'
        ]
    },
    "install_requires": ["numpy>=1.15", "sympy>=1.10", "jsonschema>=3.0", "matplotlib>=3.3"],
    "setup_requires": ["setuptools>=38.6.0"],
    "python_requires": ">=3.6",
    "classifiers":[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    }

setup(**SETUP_METADATA)
