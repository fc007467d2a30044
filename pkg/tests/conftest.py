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
from pathlib import Path
from typing import Iterator

import pytest
from hypothesis import HealthCheck, settings
from pyfakefs.fake_filesystem import FakeFilesystem
from pyfakefs.fake_filesystem_unittest import Patcher

from ua.container import container

# Modules which must keep using the real os module when Parallel(backend="threading") starts a pool
THREAD_POOL_MODULES = ["joblib",
                       "joblib.parallel",
                       "joblib._parallel_backends",
                       "joblib.pool",
                       "multiprocessing",
                       "multiprocessing.connection",
                       "multiprocessing.pool",
                       "multiprocessing.queues",
                       "multiprocessing.synchronize",
                       "multiprocessing.util",
                       "multiprocessing.dummy"]

# conftest.py is ran by pytest before loading each testing module
# Fixtures defined in here are therefore available in all testing modules

settings.register_profile("ua",
                           deadline=None,
                           database=None,
                           suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow])
settings.load_profile("ua")


@pytest.fixture
def fs() -> Iterator[FakeFilesystem]:
    """Replaces pyfakefs' own fixture with one that leaves the modules behind joblib's thread pools unpatched."""
    # Thread pools create real pipes, which fail on fake file descriptors
    with Patcher(additional_skip_names=THREAD_POOL_MODULES) as patcher:
        yield patcher.fs


@pytest.fixture(autouse=True)
def fake_filesystem(fs: FakeFilesystem) -> FakeFilesystem:
    """A pytest fixture which mocks the filesystem before each test."""
    # The "fs" argument triggers the fs fixture above to start pyfakefs
    # After pyfakefs has started all filesystem actions will happen on a fake in-memory filesystem

    # Create a fake home directory and set the cwd to an empty directory
    fs.create_dir(Path.home() / "testing")
    os.chdir(Path.home() / "testing")

    # Reset all singletons so Path instances get recreated
    # Path instances are bound to the filesystem that was active at the time of their creation
    container.reset_singletons()

    return fs


@pytest.fixture(autouse=True)
def reset_container_overrides() -> None:
    """A pytest fixture which makes sure all container and provider overrides are reset before each test."""
    for provider in container.traverse():
        provider.reset_override()

    container.reset_override()
