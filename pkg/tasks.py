from atelier.invlib import setup_from_tasks
ns = setup_from_tasks(
    globals(), "compat_reason",
    revision_control_system='git')
