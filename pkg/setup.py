# UA - finite unary algebras and their subdirect powers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import re

from setuptools import find_packages, setup

current_dir = os.path.abspath(os.path.dirname(__file__))


def read(relative_path: str) -> str:
    with open(os.path.join(current_dir, relative_path)) as file:
        return file.read()


def get_version() -> str:
    version_file = read("ua/__init__.py")
    version_match = re.search(r"^__version__ = \"([^\"]+)\"", version_file, re.M)
    version = version_match.group(1)
    # "dev" is not a valid PEP 440 version, packaging metadata needs one
    return "0.0.0.dev0" if version == "dev" else version


# Production dependencies
install_requires = [
    "click>=8.0.4",
    "json5>=0.9.8",
    "rich>=9.10.0",
    "dependency-injector>=4.39.1",
    "pydantic>=1.8.2,<2",
    "joblib>=1.1.0",
    "networkx>=2.6"
]

setup(
    name="unary-subpowers",
    version=get_version(),
    description="A CLI and library classifying finite unary algebras and building their subdirect powers",
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["ua", "ua.*"]),
    entry_points={
        "console_scripts": ["ua=ua.main:main"]
    },
    install_requires=install_requires,
    python_requires=">= 3.8",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10"
    ]
)
