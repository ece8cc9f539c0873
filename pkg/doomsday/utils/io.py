import json
import yaml

from ..exceptions import InputError

FORMATS = ('json', 'yaml')


def dumps_config(config, file_format='json'):
    """Render a result or certificate document as text.

    JSON output has sorted keys, four space indentation and a trailing
    newline, so equal documents always give identical bytes.

    # Arguments
        config: dictionary of plain values (strings, numbers, lists, dicts).
        file_format: 'json' or 'yaml'.

    # Raises
        InputError for any other format
    """
    if file_format == 'json':
        return json.dumps(config, indent=4, sort_keys=True) + '\n'
    if file_format == 'yaml':
        return yaml.safe_dump(config, default_flow_style=False)
    raise InputError('Unsupported file format {}, use one of {}'.format(
        file_format, ', '.join(FORMATS)))


def serialize_config(config, file_name, file_format='json'):
    """Write a document to `file_name` in `file_format`."""
    text = dumps_config(config, file_format)
    with open(file_name, 'w') as out:
        out.write(text)


def loads_config(text):
    """Parse a document from JSON or YAML text.

    JSON is a subset of YAML, so one loader handles both.

    # Raises
        InputError when the text is not a mapping
    """
    try:
        result = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InputError('Document is neither JSON nor YAML: {}'.format(e))
    if not hasattr(result, 'keys'):
        raise InputError('Document must be a JSON object or YAML mapping')
    return result


def deserialize_config(file_name):
    """Read a JSON or YAML document from `file_name`."""
    with open(file_name) as source:
        return loads_config(source.read())
