from setuptools import setup, find_packages

with open("README.rst") as f:
    readme = f.read()

setup(
    name="pyqsc",
    version="0.1.0",
    description="Sextic cyclotomic codes and quantum synchronizable codes in python",
    long_description=readme,
    python_requires=">=3.8",
    keywords="cyclic codes cyclotomy quantum synchronizable codes finite fields",
    license="BSD 3-Clause",
    packages=find_packages(exclude=("pyqsctests",)),
    zip_safe=False,
    install_requires=["numpy", "galois"],
    extras_require={
        "dev": [
            "pytest",
            "sphinx",
            "sphinx-rtd-theme",
            "nox",
            "black",
            "jsonschema",
        ],
    },
    entry_points={"console_scripts": ["pyqsc = pyqsc.cli:main"]},
)
