# Collection wiring: the suite is a set of plain assert scripts (driven by
# runtests.py). Run each script as one pytest item.
import os
import pathlib
import runpy
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
SKIP = {'conftest.py', 'runtests.py'}


class ScriptItem(pytest.Item):
    def runtest(self):
        oldcwd = os.getcwd()
        sys.path.insert(0, HERE)
        os.chdir(HERE)
        try:
            runpy.run_path(str(self.path), run_name='__main__')
        finally:
            os.chdir(oldcwd)
            sys.path.remove(HERE)

    def reportinfo(self):
        return self.path, 0, 'script: {}'.format(self.name)


class ScriptFile(pytest.File):
    def collect(self):
        yield ScriptItem.from_parent(self, name=os.path.basename(str(self.path)))


def pytest_collect_file(parent, file_path):
    if file_path.parent == pathlib.Path(HERE) and file_path.suffix == '.py' \
            and file_path.name not in SKIP:
        return ScriptFile.from_parent(parent, path=file_path)
