import json, os
out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "v1")
S = "https://json-schema.org/draft/2020-12/schema"
num = {"type": "number"}
tols = {"type": "object", "additionalProperties": {"type": "number", "exclusiveMinimum": 0},
        "required": ["catalog_nonneg", "catalog_residual", "kraus", "margin", "nonneg",
                     "phase1", "pivot", "span_rank", "witness_residual"]}
header = {"tool": {"const": "nnsdist"}, "version": {"type": "string"},
          "schema_version": {"const": 1}, "command": {"type": "string"}, "tolerances": tols}
hreq = list(header)
matrix = {"type": "object", "required": ["rows", "cols", "data"],
          "properties": {"rows": {"type": "integer", "minimum": 0},
                         "cols": {"type": "integer", "minimum": 0},
                         "data": {"type": "array", "items": num,
                                  "description": "row-major, interleaved real and imaginary parts"}}}
reduced = {"type": "object", "required": ["order", "labels", "entries"],
           "properties": {"order": {"type": "integer", "minimum": 1},
                          "labels": {"type": "array", "items": {"type": "string", "pattern": r"^\[\d+,\d+,\d+\]$"}},
                          "entries": {"type": "array", "items": num}}}
probe = {"type": "object", "required": ["alpha", "outcome", "feasible", "metric"],
         "properties": {"alpha": num, "outcome": {"enum": ["witness", "certificate", "indeterminate"]},
                        "feasible": {"type": "boolean"}, "metric": num}}

def doc(name, title, props, req, extra=None):
    d = {"$schema": S, "$id": f"nnsdist/v1/{name}.json", "title": title, "type": "object",
         "required": hreq + req, "properties": {**header, **props}}
    if extra: d.update(extra)
    with open(os.path.join(out, name + ".json"), "w") as f:
        json.dump(d, f, indent=2); f.write("\n")

doc("build", "Matrix emitted by nnsdist build",
    {"n": {"type": "integer", "minimum": 1}, "alpha": num,
     "emit": {"enum": ["A", "A-kron", "Q", "B", "C", "C-block"]},
     "form": {"enum": ["original", "reduced"]}, "matrix": matrix},
    ["n", "alpha", "emit", "matrix"])
doc("verify-catalog", "One element of the array emitted by nnsdist verify-catalog",
    {"order": {"type": "integer"}, "alpha": num, "residual_inf": num, "min_entry": num,
     "nonneg": {"type": "boolean"}, "nonzero": {"type": "boolean"},
     "palindromic": {"type": "boolean"}, "passed": {"type": "boolean"}},
    ["order", "alpha", "residual_inf", "min_entry", "nonneg", "nonzero", "palindromic", "passed"])
doc("feasibility", "Decision emitted by nnsdist feasibility",
    {"order": {"type": "integer"}, "alpha": num,
     "outcome": {"enum": ["witness", "certificate", "indeterminate"]},
     "residual": num, "y": reduced, "margin": num, "h": {"type": "array", "items": num},
     "phase_one_objective": num, "best_residual": {"type": ["number", "null"]},
     "best_margin": {"type": ["number", "null"]}},
    ["order", "alpha", "outcome"],
    {"allOf": [
        {"if": {"properties": {"outcome": {"const": "witness"}}}, "then": {"required": ["residual", "y"]}},
        {"if": {"properties": {"outcome": {"const": "certificate"}}}, "then": {"required": ["margin", "h"]}},
        {"if": {"properties": {"outcome": {"const": "indeterminate"}}},
         "then": {"required": ["phase_one_objective", "best_residual", "best_margin"]}}]})
doc("threshold", "Bisection result emitted by nnsdist threshold",
    {k: num for k in ["alpha_star", "bracket_lo", "bracket_hi", "bracket_width", "conjectured",
                      "deviation", "tol"]} | {"order": {"type": "integer"},
                                              "probes": {"type": "integer"},
                                              "indeterminate_probes": {"type": "integer"}},
    ["order", "alpha_star", "bracket_lo", "bracket_hi", "bracket_width", "conjectured",
     "deviation", "probes", "indeterminate_probes"])
doc("necessity", "Grid scan emitted by nnsdist necessity",
    {"order": {"type": "integer"}, "min_margin": num,
     "anomalies": {"type": "array", "items": {"type": "integer", "minimum": 0}},
     "points": {"type": "array", "items": probe}},
    ["order", "min_margin", "anomalies", "points"])
doc("sweep", "Grid scan emitted by nnsdist sweep",
    {"order": {"type": "integer"}, "points": {"type": "array", "items": probe}},
    ["order", "points"])
doc("realize", "Channel pair emitted by nnsdist realize",
    {"seed": {"type": "integer"}, "basis_indices": {"type": "array", "items": {"type": "integer"}},
     "verification": {"type": "object",
                      "required": ["kraus_defect_E", "kraus_defect_F", "kraus_E_passed",
                                   "kraus_F_passed", "span_dimension", "product_span_dimension",
                                   "span_equal", "passed"]},
     "kraus": {"type": "object", "required": ["n", "scale", "rank", "block_width", "E", "F"],
               "properties": {"E": {"type": "array", "items": matrix},
                              "F": {"type": "array", "items": matrix}}}},
    ["basis_indices", "verification", "kraus"])
