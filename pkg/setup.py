from setuptools import setup, find_packages

setup(
    name="boolprod_kernel",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["cli"],
    install_requires=[
        "click>=8.0.0",
        "pydantic>=2.0.0",
        "tqdm>=4.60.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "hypothesis>=6.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "boolprod=cli:main",
        ],
    },
    python_requires=">=3.8",
)
