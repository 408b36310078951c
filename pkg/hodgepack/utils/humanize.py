__all__ = ['naturaldelta', 'plural']

_UNITS = [('day', 86400), ('hour', 3600), ('minute', 60)]


def plural(count: int, noun: str) -> str:
    return f'{count} {noun}' + ('' if count == 1 else 's')


def naturaldelta(seconds: float) -> str:
    if seconds < 0:
        raise ValueError('`seconds` needs to be >= 0.')
    if seconds < 1:
        # checks on small forms finish in milliseconds
        return '{:.3g} ms'.format(seconds * 1000)
    if seconds < 60:
        return '{:.3g} seconds'.format(seconds)

    texts = []
    for unit, divisor in _UNITS:
        value = int(seconds // divisor)
        seconds -= value * divisor
        if value:
            texts.append(plural(value, unit))
    if int(seconds):
        texts.append(plural(int(seconds), 'second'))
    return ' '.join(texts)
