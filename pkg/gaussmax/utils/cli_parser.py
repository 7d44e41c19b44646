import click

from gaussmax.data.utils.exceptions import InvalidInput


def _convert(value: str):
    if value.lower() == 'true':
        return True
    if value.lower() == 'false':
        return False
    try:
        return float(value)
    except ValueError:
        return value


def arg_parse(ctx: 'click.Context') -> dict:
    # extra ``--name value`` pairs; a bare ``--flag`` means True
    extra_kwargs = {}
    i = 0
    while i < len(ctx.args):
        arg = ctx.args[i]
        if not arg.startswith('--'):
            raise InvalidInput(f'unexpected argument {arg!r}')
        param_name = arg[2:].replace('-', '_')
        if i + 1 < len(ctx.args) and not ctx.args[i + 1].startswith('--'):
            extra_kwargs[param_name] = _convert(ctx.args[i + 1])
            i += 2
        else:
            extra_kwargs[param_name] = True
            i += 1
    return extra_kwargs


def parse_inputs(text: str | None) -> dict:
    """``"delta=1e-6,p=100"`` -> ``{'delta': 1e-06, 'p': 100.0}``."""
    inputs = {}
    if not text:
        return inputs
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition('=')
        if not sep or not name.strip():
            raise InvalidInput(f"inputs must look like 'name=value', got {item!r}")
        inputs[name.strip()] = _convert(value.strip())
    return inputs
