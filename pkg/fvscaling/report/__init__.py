from .report import ReportError, LengthMismatchError, ZeroDirectError, ConvergenceRow, ConvergenceTable, TableRun, \
    l1_error, gaining, build_table, emit_csv, emit_profiles, emit_profile, reproduce_table
