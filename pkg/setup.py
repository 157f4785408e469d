"""Packaging of HandsOff."""
import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()


setuptools.setup(
    name="handsoff",
    version="0.1.0",
    author="HandsOff developers",
    author_email="author@example.com",
    description=(
        "Sparse maximum hands-off control of linear time-invariant plants."
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    package_dir={"": "."},
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    zip_safe=False,
    install_requires=[
        "numpy>=1.21",
        "scipy>=1.7",
        "PyYAML>=5.4",
        "joblib>=1.1",
    ],
    entry_points={
        "console_scripts": ["handsoff = handsoff.cli.main:main"],
    },
)
