import setuptools

setuptools.setup(
    name = "qpkit",
    author = "Sven Templer",
    author_email = "mail@templer.se",
    description = "Exact computations with quivers with potential.",
    long_description = open("README.md", encoding = "utf-8").read(),
    long_description_content_type = "text/markdown",
    packages = setuptools.find_packages(exclude = ["tests", "tests.*"]),
    entry_points = {
        "console_scripts": [
            "qpkit=qpkit.cli:main",
        ]
    },
    classifiers = [
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3"
    ],
    install_requires = open("requirements.txt").readlines(),
    python_requires = ">=3.9",
)
