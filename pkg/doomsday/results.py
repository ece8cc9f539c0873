import logging

from .equilibria import Certificate, Verdict
from .exceptions import InputError, MalformedCertificate
from .utils.io import deserialize_config, dumps_config, loads_config, serialize_config

logger = logging.getLogger(__name__)

OWNER_SHAPES = ['circle', 'box', 'diamond', 'hexagon', 'triangle', 'octagon', 'house', 'pentagon']


def certificate_to_dict(certificate):
    """The `certificate` sub-document of a result: compacted lasso and the
    retaliation strategies as `{player: [{state, memory, choice}]}`, where
    `memory` is the retaliation automaton state."""
    retaliation = {}
    for player in sorted(certificate.retaliation):
        rows = [{'state': state, 'memory': q, 'choice': target}
                for (state, q), target in certificate.retaliation[player].items()]
        retaliation[str(player)] = sorted(rows, key=lambda r: (r['state'], r['memory']))
    return {
        'stem': list(certificate.stem),
        'cycle': list(certificate.cycle),
        'retaliation': retaliation
    }


def result_to_dict(verdict):
    result = {'verdict': verdict.label, 'players': verdict.players}
    if verdict.exists:
        result['certificate'] = certificate_to_dict(verdict.certificate)
    return result


def serialize_result(verdict, certificate=None):
    """Render a verdict as JSON text with sorted keys.

    # Arguments
        verdict: `Verdict` from `decide_doomsday`.
        certificate: overrides the verdict's certificate when given.
    """
    if certificate is not None:
        verdict = Verdict(verdict.players, certificate, verdict.classes)
    return dumps_config(result_to_dict(verdict))


def save_result(verdict, file_name, file_format='json'):
    serialize_config(result_to_dict(verdict), file_name, file_format)


def _state_list(value, key):
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise MalformedCertificate('{} must be a list of state ids'.format(key))
    return list(value)


def certificate_from_dict(config, players=None):
    """Rebuild a `Certificate` from a result document or its `certificate`
    sub-document.

    # Raises
        MalformedCertificate
    """
    if not hasattr(config, 'keys'):
        raise MalformedCertificate('certificate document must be a mapping')
    if 'verdict' in config:
        if config.get('verdict') != Verdict.EXISTS or 'certificate' not in config:
            raise MalformedCertificate('document holds no certificate')
        players = config.get('players', players)
        config = config['certificate']
        if not hasattr(config, 'keys'):
            raise MalformedCertificate('certificate must be a mapping')
    for key in ('stem', 'cycle', 'retaliation'):
        if key not in config:
            raise MalformedCertificate('certificate has no {!r} entry'.format(key))
    stem = _state_list(config['stem'], 'stem')
    cycle = _state_list(config['cycle'], 'cycle')
    if not cycle:
        raise MalformedCertificate('cycle must be nonempty')

    retaliation = {}
    rows_by_player = config['retaliation']
    if not hasattr(rows_by_player, 'keys'):
        raise MalformedCertificate('retaliation must map players to rows')
    for player, rows in rows_by_player.items():
        try:
            player = int(player)
        except (TypeError, ValueError):
            raise MalformedCertificate('bad player key {!r}'.format(player))
        table = {}
        for row in rows or []:
            try:
                table[(row['state'], int(row['memory']))] = row['choice']
            except (KeyError, TypeError, ValueError):
                raise MalformedCertificate('bad retaliation row {!r}'.format(row))
        retaliation[player] = table
    return Certificate(stem, cycle, retaliation, players)


def load_certificate(text):
    """Parse a certificate from JSON or YAML text."""
    try:
        config = loads_config(text)
    except InputError as e:
        raise MalformedCertificate(str(e))
    return certificate_from_dict(config)


def read_certificate(file_name):
    try:
        config = deserialize_config(file_name)
    except InputError as e:
        raise MalformedCertificate(str(e))
    return certificate_from_dict(config)


def _quote(value):
    return '"{}"'.format(str(value).replace('\\', '\\\\').replace('"', '\\"'))


def _play_edges(certificate):
    play = certificate.stem + certificate.cycle + certificate.cycle[:1]
    return set(zip(play, play[1:]))


def export_dot(arena, profile=None, annotations=None, name='game'):
    """Render the arena in Graphviz DOT.

    Nodes are labelled `id (Pk)` and shaped by owner; the initial state has
    a double border. With a certificate as `annotations`, the edges of its
    main play are drawn bold. States are listed in declaration order and
    edges by source, then target id.
    """
    lines = ['digraph {} {{'.format(_quote(name)), '    rankdir=LR;']
    if profile is not None:
        for i in arena.players:
            lines.append('    // player {}: {}'.format(i, ' '.join(profile[i].to_tokens())))
    for state, owner in arena.states:
        attributes = ['label={}'.format(_quote('{} (P{})'.format(state, owner))),
                      'shape={}'.format(OWNER_SHAPES[(owner - 1) % len(OWNER_SHAPES)])]
        if state == arena.initial:
            attributes.append('peripheries=2')
        lines.append('    {} [{}];'.format(_quote(state), ', '.join(attributes)))
    bold = _play_edges(annotations) if annotations is not None else set()
    for state, _ in arena.states:
        for target in arena.successors(state):
            style = ' [style=bold]' if (state, target) in bold else ''
            lines.append('    {} -> {}{};'.format(_quote(state), _quote(target), style))
    lines.append('}')
    return '\n'.join(lines) + '\n'
