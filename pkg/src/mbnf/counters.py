"""Instrumentation counters for oracle-call accounting.

The partition engines make two kinds of oracle calls: propositional
satisfiability checks and (for the flat engine) whole S5-validity checks.
Counters are process-global and only meant for benchmarking tests.
"""

sat_calls = 0
s5_calls = 0
s5_internal_sat_calls = 0
maximality_sat_calls = 0


def reset():
    global sat_calls, s5_calls, s5_internal_sat_calls, maximality_sat_calls
    sat_calls = 0
    s5_calls = 0
    s5_internal_sat_calls = 0
    maximality_sat_calls = 0


def count_sat_call():
    global sat_calls
    sat_calls += 1


def snapshot():
    return {
        "sat_calls": sat_calls,
        "s5_calls": s5_calls,
        "s5_internal_sat_calls": s5_internal_sat_calls,
        "maximality_sat_calls": maximality_sat_calls,
    }
