from setuptools import setup, find_packages

setup(
    name="fuzzy-spectra",
    version="1.0.0",
    description="Equilibrium measures, phase transitions and Monte-Carlo checks for the (1,0) and (0,1) fuzzy-geometry random matrix models",
    packages=find_packages(exclude=["tests", "tests.*", "scripts"]),
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=1.10,<2",
        "python-dotenv>=1.0",
        "numpy>=1.22",
        "scipy>=1.8",
        "pandas>=1.5",
    ],
    entry_points={
        "console_scripts": [
            "fuzzy-spectra=src.main:main",
        ],
    },
)
