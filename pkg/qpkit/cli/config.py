# qpkit.cli.config


import logging
log = logging.getLogger()


from .. import config


QPKIT_INFO = config.QPKIT_INFO


TEMPLATE = """# qpkit.yaml

# null: 4 * |Q0| * longest cycle of the potential
degree_bound: null
degree_ceiling: 512
# longest term created while removing 2-cycles
reduction_bound: 40
# Tietze eliminations when simplifying fundamental groups
effort_bound: 200
lattice_size_bound: 500
# id | canonical
seed_order: id
"""


def command(args, parser, cfg):
    if args.template:
        log.info("show a template only")
        print(TEMPLATE)
        return 0
    log.info(f"show config file '{cfg.path}'")
    print(cfg)
    return 0
