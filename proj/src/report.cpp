#include "pg/report.hpp"

namespace pg {

namespace {

ordered_json word_json(const Ball& b, int id) {
  if (id < 0) return nullptr;
  return b.universe().print_word(b.word(id));
}

ordered_json check_json(const LemmaCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["measured"] = c.measured;
  if (c.bound >= 0) j["bound"] = c.bound;
  if (!c.bound_expr.empty()) j["bound_expr"] = c.bound_expr;
  j["instances"] = c.instances;
  j["skipped"] = c.skipped;
  j["violation_count"] = c.violation_count;
  if (!c.violations.empty()) j["violations"] = c.violations;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json const_json(const ConstEntry& c) {
  ordered_json j;
  j["value"] = c.value;
  j["exact"] = c.exact;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

ordered_json pregroup_report(const Pregroup& p) {
  ordered_json j;
  j["name"] = p.name();
  j["size"] = p.size();
  ordered_json labels = ordered_json::array();
  for (Elem x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
  j["elements"] = labels;
  j["defined_entries"] = p.table_entries();
  ordered_json bps = ordered_json::array();
  for (Elem x : bp(p)) bps.push_back(p.label(x));
  j["bp"] = bps;
  j["p6_holds"] = scan_p6(p);
  return j;
}

ordered_json to_json(const AxiomVerdict& v) {
  ordered_json j;
  j["axiom"] = axiom_name(v.axiom);
  j["holds"] = v.holds;
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

ordered_json tree_report(const Pregroup& p) {
  OrderTree t = order_tree(p);
  ordered_json j;
  j["classes"] = t.num_classes();
  ordered_json blocks = ordered_json::array();
  for (const auto& blk : t.blocks) {
    ordered_json labels = ordered_json::array();
    for (Elem x : blk) labels.push_back(p.label(x));
    blocks.push_back(labels);
  }
  j["blocks"] = blocks;
  ordered_json edges = ordered_json::array();
  for (const auto& e : t.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  j["heights"] = t.heights;
  j["identity_class"] = t.identity_class;
  j["finite_height"] = t.finite_height;
  std::string why;
  j["is_tree"] = is_tree(t, &why);
  if (!why.empty()) j["why"] = why;
  return j;
}

ordered_json to_json(const Universe& u, const LyndonReport& r) {
  ordered_json j;
  j["pairs"] = r.pairs;
  j["triples"] = r.triples;
  j["ok"] = r.ok();
  ordered_json issues = ordered_json::array();
  for (const auto& i : r.issues) {
    ordered_json ij;
    ij["clause"] = i.clause;
    ij["g"] = u.print_word(i.g);
    if (i.h.size() > 0) ij["h"] = u.print_word(i.h);
    if (i.k.size() > 0) ij["k"] = u.print_word(i.k);
    ij["detail_x2"] = i.detail;
    issues.push_back(ij);
  }
  j["issues"] = issues;
  return j;
}

ordered_json ball_report(const Ball& b) {
  ordered_json j;
  j["pregroup"] = b.universe().pregroup().name();
  j["radius"] = b.radius();
  j["gens"] = b.gens_label();
  j["vertices"] = b.size();
  std::vector<int> spheres(static_cast<std::size_t>(b.radius()) + 1, 0);
  for (int v = 0; v < b.size(); ++v)
    ++spheres[static_cast<std::size_t>(b.dist0(v))];
  j["spheres"] = spheres;
  return j;
}

ordered_json to_json(const Ball& b, const Delta4& d) {
  ordered_json j;
  j["delta_4pt_x4"] = d.delta_x4;
  ordered_json w = ordered_json::array();
  for (int id : d.witness) w.push_back(word_json(b, id));
  j["witness"] = w;
  j["quadruples"] = d.quadruples;
  return j;
}

ordered_json to_json(const Ball& b, const DeltaThin& d) {
  ordered_json j;
  j["delta_thin_x2"] = 2 * d.delta;
  ordered_json w = ordered_json::array();
  for (int id : d.witness) w.push_back(word_json(b, id));
  j["witness"] = w;
  j["triangles"] = d.triangles;
  j["exhaustive"] = d.exhaustive;
  j["geodesics_complete"] = d.geodesics_complete;
  return j;
}

ordered_json to_json(const HConstants& h) {
  ordered_json j;
  j["radius"] = h.radius;
  j["gens"] = h.gens;
  j["c0"] = const_json(h.c0);
  j["c1"] = const_json(h.c1);
  j["c2_x2"] = const_json(h.c2);
  j["c3"] = const_json(h.c3);
  return j;
}

ordered_json to_json(const LemmaReport& r) {
  ordered_json j;
  j["constants"] = to_json(r.constants);
  j["constants_overridden"] = r.constants_overridden;
  ordered_json checks = ordered_json::array();
  for (const LemmaCheck* c :
       {&r.d1, &r.d2, &r.d3, &r.d4, &r.d5, &r.ham_a, &r.ham_b, &r.ham_c})
    checks.push_back(check_json(*c));
  j["checks"] = checks;
  j["final_d"] = r.final_d;
  j["attained_by"] = r.attained_by;
  j["note"] = r.note;
  j["ok"] = r.ok();
  return j;
}

}  // namespace pg
