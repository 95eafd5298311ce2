from ..asm import Root, Seq, Loop, Branch, Step, Move, Write, Halt, Label, Goto, INPUT, SCRATCH, OUTPUT
from ..machine import Program

# scratch 0 flashes once per limit; it reads 1 only at limits of limits
LAYOUT = {
    'flash': (SCRATCH, 0),
    'master': (SCRATCH, 1),
    'done': (OUTPUT, 0),
    'changed': (OUTPUT, 1),
}


def flag_flash_detector() -> Program:
    """
    Reports whether the master flag changed infinitely often before the last limit.

    Input cell 0 picks the writer: 1 toggles the master flag forever, 0 idles.
    At every limit the handler copies the master flag to output cell 1 and
    resets it; at w^2 it sets output cell 0 and halts.
    """
    writer = Seq(
        Label('writer'),
        Branch(INPUT, Loop(Step()), Seq(Move(1), Loop(Seq(Write(SCRATCH, 1), Write(SCRATCH, 0))))),
    )
    report = Branch(
        SCRATCH,
        Write(OUTPUT, 0),
        Seq(Write(OUTPUT, 1), Write(SCRATCH, 0)),
    )
    on_limit = Branch(
        SCRATCH,
        Seq(Write(SCRATCH, 1), Write(SCRATCH, 0), Move(1), report, Move(-1), Goto('writer')),
        Seq(Write(OUTPUT, 1), Halt()),
    )
    return Root(writer, on_limit, LAYOUT, 'flag_flash_detector').program()
