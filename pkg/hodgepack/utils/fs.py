import os

__all__ = ['normpath', 'makedir']


def normpath(path: str) -> str:
    return os.path.normpath(os.path.expanduser(path))


def makedir(dirpath: str) -> None:
    if not dirpath:
        return
    dirpath = normpath(dirpath)
    os.makedirs(dirpath, exist_ok=True)
    if not os.path.isdir(dirpath):
        raise OSError(f'"{dirpath}" cannot be created.')
