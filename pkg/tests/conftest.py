import os

GOLDENS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "goldens")

# argv per golden instance (file path appended first), mirroring how the
# bundled expected outputs and certificates were produced
GOLDEN_COMMANDS = {
    "g01-loop.vas": ["decide"],
    "g02-loop-unreach.vas": ["decide"],
    "g03-zero-edge.vas": ["decide"],
    "g04-two-loops.vas": ["decide"],
    "g05-slide.vas": ["decide"],
    "g06-parity.vas": ["decide"],
    "g07-alternate.vas": ["decide"],
    "g08-dead.vas": ["decide"],
    "g09-slps-up.vas": ["slps-decide"],
    "g10-slps-unreach.vas": ["slps-decide"],
    "g11-slps-two-cycles.vas": ["slps-decide"],
    "g12-slps-dip.vas": ["slps-decide"],
    "g13-slps-balance.vas": ["slps-decide"],
    "g14-slps-stride.vas": ["slps-decide"],
    "g15-shorten-far.vas": ["shorten", "--op", "far"],
    "g16-shorten-close.vas": ["shorten", "--op", "close-away", "--corridor", "8"],
    "g17-shorten-cut.vas": ["shorten", "--op", "cut", "--direction", "0,0", "--count", "1"],
    "g18-shorten-away.vas": ["shorten", "--op", "away-both", "--count", "1"],
    "g19-lps-basic.vas": ["flatten"],
    "g20-lps-two-cycles.vas": ["flatten"],
    "g21-lps-empty-segs.vas": ["flatten"],
    "g22-lps-three.vas": ["flatten"],
}

CERTIFIED = [name for name, argv in GOLDEN_COMMANDS.items() if argv[0] != "flatten"]


def golden_argv(name: str) -> list[str]:
    argv = GOLDEN_COMMANDS[name]
    return [argv[0], os.path.join(GOLDENS_DIR, name)] + argv[1:]
