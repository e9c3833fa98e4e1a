from collections.abc import Iterable


def list_to_str(items: Iterable, conjunction: str = 'and') -> str:
    """
    Join items for an error message: "1", "1 and 2", "1, 2, and 3".

    Args:
        items: The items, converted with str().
        conjunction: The word before the last item. Defaults to 'and'.

    Returns:
        str: The joined string. Empty if there are no items.
    """

    items = [str(i) for i in items]
    if len(items) <= 1:
        return ''.join(items)
    if len(items) == 2:
        return f'{items[0]} {conjunction} {items[1]}'
    return ', '.join(items[:-1]) + f', {conjunction} {items[-1]}'
