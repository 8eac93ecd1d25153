from rich.console import Console
from rich.table import Table

console = Console()


def stats_line(variables, clauses, strategy, n, k=None, variant=None):
    """
    Machine-readable one-line summary of an encoding, e.g.
    ``vars=120 clauses=480 strategy=recursiveBlocks n=16 k=4 variant=I``.
    """
    parts = [f"vars={variables}", f"clauses={clauses}", f"strategy={strategy}", f"n={n}"]
    if k is not None:
        parts.append(f"k={k}")
    if variant is not None:
        parts.append(f"variant={variant}")
    return " ".join(parts)


def display_stats(rows, title):
    """
    Display clause counts of several strategies.

    Args:
        rows (list): Tuples (strategy, variables, clauses).
        title (str): Table title.
    """
    table = Table("Strategy", "Variables", "Clauses", title=title)
    for strategy, variables, clauses in rows:
        table.add_row(strategy, str(variables), str(clauses))
    console.print(table)


def display_verdict(verdict, what):
    if verdict.passed:
        console.print(f"[green]PASS[/green] {what}: {verdict.message}")
        return
    console.print(f"[red]FAIL[/red] {what} after {verdict.checked} assignments: {verdict.message}")
    if verdict.witness:
        witness = " ".join(str(var if value else -var) for var, value in sorted(verdict.witness.items()))
        console.print(f"witness: {witness}")


def display_bva_steps(steps, before, after):
    """
    Display the BVA step log.

    Args:
        steps (list): BvaStep records.
        before (int): Clause count of the input.
        after (int): Clause count of the output.
    """
    table = Table("Step", "|L|", "|Gamma|", "Gain", "New var", title=f"BVA: {before} -> {after} clauses")
    for number, step in enumerate(steps, start=1):
        table.add_row(str(number), str(step.lits_count), str(step.gamma_count), str(step.gain), str(step.new_var))
    console.print(table)


def display_schedule(instance, schedule):
    if schedule is None:
        console.print("No schedule exists.")
        return
    table = Table("Task", "Duration", "Window", "Start", "Machine")
    for i, (start, machine) in sorted(schedule.items()):
        task = instance.tasks[i - 1]
        table.add_row(str(i), str(task.d), f"[{task.r}, {task.e}]", str(start), str(machine))
    console.print(table)
