import pytest
from hypothesis import given, strategies as st

from ittm.asm import parse, format, validate, assemble, disassemble, encode_index, decode_index, is_valid_index, \
    NOOP, Root, Seq, Loop, Branch, Step, Write, Move, Halt, Label, Goto, Switch, FlagSet, FlagBranch, Flash, \
    ScanRightUntil, INPUT, SCRATCH, OUTPUT
from ittm.errors import AsmSyntaxError, ValidationError, MacroError
from ittm.machine import run, Halted
from ittm.ordinal import parse_cnf
from ittm.real import parse_real, EMPTY

SOURCE = '''
# runs right, then writes a 1 at the first limit
@name marker
@start s
@limit l
@halt h
s (_ _ _) -> write(_ _ _) move(R) goto s
l (_ _ _) -> write(_ _ 1) move(S) goto h   # done
'''


def test_parse():
    source = parse(SOURCE)
    assert (source.name, source.start, source.limit, source.halt) == ('marker', 's', 'l', 'h')
    assert [line.lineno for line in source.lines] == [7, 8]
    assert source.lines[1].write == (None, None, 1)
    assert source.states == ['s', 'l', 'h']


def test_format_is_canonical():
    source = parse(SOURCE)
    text = format(source)
    assert parse(text) == source
    assert format(parse(text)) == text
    assert text.startswith('@name marker\n')


@pytest.mark.parametrize('text, line, column', [
    ('s (_ _ 2) -> write(_ _ _) move(S) goto h', 1, 8),
    ('\ns (_ _) -> write(_) move(S) goto h', 2, None),
    ('s (_ _ _) -> write(_ _ _) move(X) goto h', 1, None),
    ('s (_ _ _) -> write(_ _ _) move(S) goto', 1, None),
    ('s (_ _ _) -> write(_ _ _) move(S) goto h extra', 1, None),
    ('@tapes 5', 1, None),
    ('@start', 1, None),
    ('@start a\n@start b', 2, None),
    ('@origin 3', 1, None),
    ('s (_ _ _) => write(_ _ _)', 1, None),
])
def test_syntax_errors(text, line, column):
    with pytest.raises(AsmSyntaxError) as e:
        parse(text)
    assert e.value.line == line
    if column is not None:
        assert e.value.column == column


def test_validate_builds_full_table():
    program = assemble(SOURCE)
    assert program.name == 'marker'
    assert program.live_states == ['s', 'l']
    assert len(program.transitions) == 2 * 8
    assert program.action('s', (1, 0, 1)).write == (1, 0, 1)
    assert program.action('l', (0, 0, 0)).write == (0, 0, 1)


def test_validation_collects_every_violation():
    text = '''
    @start s
    @limit s
    s (0 _ _) -> write(_ _ _) move(S) goto h
    s (0 0 _) -> write(_ _ _) move(S) goto h
    h (_ _ _) -> write(_ _ _) move(S) goto s
    '''
    with pytest.raises(ValidationError) as e:
        assemble(text)
    violations = ' '.join(e.value.violations)
    assert '@halt is missing' in violations
    assert 'already has a transition' in violations
    assert 'no transition on (1, 0, 0)' in violations
    assert len(e.value.violations) > 3


def test_default_fills_missing_reads():
    text = '''
    @start s
    @limit l
    @halt h
    @default h
    s (1 _ _) -> write(_ _ 1) move(S) goto h
    '''
    program = assemble(text)
    assert run(program, parse_real('fs{0}')).output.as_spec() == parse_real('fs{0}')
    assert run(program).output.as_spec() == EMPTY


def test_query_needs_oracle_tape():
    with pytest.raises(ValidationError):
        assemble('@start s\n@limit l\n@halt h\n@default h\ns (_ _ _) -> write(_ _ _) move(S) goto h query')


def test_disassemble():
    program = assemble(SOURCE)
    assert validate(disassemble(program)) == program
    assert assemble(format(disassemble(program))) == program


def test_noop():
    assert encode_index(NOOP) == 0
    assert run(NOOP).stage == 1
    assert decode_index(0) == NOOP
    with pytest.raises(ValueError):
        decode_index(-1)


def test_index_of_assembled_program():
    program = assemble(SOURCE)
    index = encode_index(program)
    assert is_valid_index(index)
    assert decode_index(index) == program.canonical()
    assert run(decode_index(index)).stage == parse_cnf('w+1')


@given(st.integers(0, 10 ** 12))
def test_every_natural_decodes(index):
    program = decode_index(index)
    assert len(program.transitions) == len(program.live_states) * 2 ** program.arity
    if is_valid_index(index):
        assert decode_index(encode_index(program)) == program.canonical()
    else:
        assert program == NOOP


def test_macros():
    program = Root(Seq(Write(OUTPUT, 1, 'R'), Write(OUTPUT, 1), Halt()), name='two').program()
    outcome = run(program)
    assert outcome.stage == 2
    assert outcome.output.as_spec() == parse_real('fs{0,1}')
    assert program.name == 'two'


def test_labels_and_loops():
    # writes the input's first bit to output cell 2 after a detour
    main = Seq(
        Goto('check'),
        Label('far'), Move(2), Write(OUTPUT, 1), Halt(),
        Label('check'), Branch(INPUT, Halt(), Goto('far')),
    )
    assert run(Root(main).program(), parse_real('fs{0}')).output.as_spec() == parse_real('fs{2}')
    assert run(Root(main).program()).output.as_spec() == EMPTY


def test_switch_and_scan():
    main = Seq(
        ScanRightUntil(INPUT, 1),
        Switch((INPUT, SCRATCH), {(1, 0): Write(OUTPUT, 1)}, default=Halt()),
    )
    outcome = run(Root(main).program(), parse_real('fs{4}'))
    assert isinstance(outcome, Halted)
    assert outcome.output.as_spec() == parse_real('fs{4}')


def test_flags():
    flags = {'seen': (SCRATCH, 3)}
    main = Seq(FlagSet('seen', at=0), FlagBranch('seen', Halt(), Write(OUTPUT, 1), at=0), Halt())
    outcome = run(Root(main, flags=flags).program())
    assert outcome.output.as_spec() == parse_real('fs{0}')

    # flashed once per block: the cell reads 0 at w*2 and 1 at w^2
    on_limit = Branch(SCRATCH, Seq(Flash('f', at=0), Goto('again')), Seq(Write(OUTPUT, 1), Halt()))
    flash = Root(Seq(Label('again'), Loop(Step())), on_limit, flags={'f': (SCRATCH, 0)})
    outcome = run(flash.program())
    assert outcome.stage == parse_cnf('w^2+2')


@pytest.mark.parametrize('build', [
    lambda: Root(Seq(Label('a'), Label('a'), Halt())).program(),
    lambda: Root(Goto('nowhere')).program(),
    lambda: Root(Loop(Seq())).program(),
    lambda: Root(Step(query=True)).program(),
    lambda: Root(Halt(), flags={'a': (SCRATCH, 0), 'b': (SCRATCH, 0)}),
    lambda: Root(Halt(), flags={'a': (5, 0)}),
    lambda: Root(FlagSet('missing')).program(),
    lambda: Root(Switch((INPUT,), {(0,): Halt()})).program(),
    lambda: Step(move='X'),
])
def test_macro_errors(build):
    with pytest.raises(MacroError):
        build()


def test_unreachable_fragments_are_dropped():
    main = Seq(Halt(), Label('dead'), Write(OUTPUT, 1), Goto('dead'))
    program = Root(main).program()
    assert len(program.states) == 3
