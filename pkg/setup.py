from setuptools import setup, find_packages

with open('README.md', 'r') as f:
    long_description = f.read()

setup(
    name='coverenc',
    version='0.1.0',
    description='coverenc compiles graph constraints to CNF with covering, BVA and interval-graph encodings.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    package_data={
        'coverenc': ['config.json'],
    },
    python_requires='>=3.10',
    install_requires=[
        "click>=8.1.7,<8.2",
        "markdown-it-py>=3.0.0",
        "mdurl>=0.1.2",
        "networkx>=3.3",
        "numpy>=1.26.4",
        "pygments>=2.17.2",
        "python-sat>=0.1.7.dev26",
        "rich>=13.7.1",
        "shellingham>=1.5.4",
        "typer>=0.12.3,<0.13",
        "typing-extensions>=4.11.0",
    ],
    extras_require={
        'dev': ['coverage>=7.4.1', 'pytest>=8.1.1']
    },
    entry_points={
        'console_scripts': [
            'coverenc=coverenc.main:main',
        ],
    },
)
