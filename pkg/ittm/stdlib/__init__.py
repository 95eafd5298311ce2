from .milestones import milestone, milestone_stage, KINDS
from .flags import flag_flash_detector
from .wo import wo_decider, linearity_check, count_through, verdict as wo_verdict, layout as wo_layout
from .demos import copy_input, parity_of_prefix, any_one, toggler, demos
from .dovetail import dovetailer, gap_finder, jump_enumerator, gap_report, universe_programs, dovetail_layout, idle
from .eck import eck_to_wo, relation_writer, chain_pairs
from .manifest import CATALOG, build, corpus, write_stdlib, read_manifest, curated_universe, curated_classical
