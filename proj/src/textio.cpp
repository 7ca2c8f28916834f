#include "holoqec/textio.hpp"

#include <sstream>

#include "holoqec/error.hpp"

namespace holoqec {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error("PARSE_ERROR", "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    parse_fail(line, "bad integer '" + tok + "'");
  }
}

GateKind parse_kind(const std::string& tok, int line) {
  auto k = gate_from_name(tok);
  if (!k) parse_fail(line, "unknown gate kind '" + tok + "'");
  if (gate_takes_param(*k)) parse_fail(line, "parametrized kinds are not file gates");
  return *k;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  bool have_dims = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (line.rfind("#@", 0) == 0) {
      std::string note = line.substr(2);
      if (!note.empty() && note[0] == ' ') note.erase(0, 1);
      c.ops.emplace_back(Annotation{note});
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "dims") {
      if (tok.size() != 4) parse_fail(line_no, "dims takes nx ny nz");
      if (have_dims) parse_fail(line_no, "duplicate dims line");
      c.dims = {parse_int(tok[1], line_no), parse_int(tok[2], line_no), parse_int(tok[3], line_no)};
      have_dims = true;
      continue;
    }
    if (tok[0] != "op") parse_fail(line_no, "expected 'op' or 'dims', got '" + tok[0] + "'");
    if (!have_dims) parse_fail(line_no, "op before dims");
    if (tok.size() < 2) parse_fail(line_no, "missing op form");
    const std::string& form = tok[1];
    if (form == "col") {
      if (tok.size() != 5) parse_fail(line_no, "op col <kind> <x> <y>");
      c.ops.emplace_back(ColumnGate{parse_kind(tok[2], line_no),
                                    {parse_int(tok[3], line_no), parse_int(tok[4], line_no)}});
    } else if (form == "twocol") {
      if (tok.size() != 7) parse_fail(line_no, "op twocol <kind> <x1> <y1> <x2> <y2>");
      c.ops.emplace_back(TwoColumnGate{parse_kind(tok[2], line_no),
                                       {parse_int(tok[3], line_no), parse_int(tok[4], line_no)},
                                       {parse_int(tok[5], line_no), parse_int(tok[6], line_no)}});
    } else if (form == "czlayer") {
      if (tok.size() != 3) parse_fail(line_no, "op czlayer oe|eo");
      if (tok[2] == "oe")
        c.ops.emplace_back(VerticalCZLayer{CZParity::OddEven});
      else if (tok[2] == "eo")
        c.ops.emplace_back(VerticalCZLayer{CZParity::EvenOdd});
      else
        parse_fail(line_no, "czlayer parity must be oe or eo, got '" + tok[2] + "'");
    } else if (form == "hlayer") {
      if (tok.size() != 2) parse_fail(line_no, "op hlayer takes no arguments");
      c.ops.emplace_back(GlobalHLayer{});
    } else if (form == "reset") {
      if (tok.size() != 4) parse_fail(line_no, "op reset <x> <y>");
      c.ops.emplace_back(ColumnReset{{parse_int(tok[2], line_no), parse_int(tok[3], line_no)}});
    } else if (form == "boundary") {
      if (tok.size() < 6 || (tok.size() - 3) % 3 != 0)
        parse_fail(line_no, "op boundary <kind> (<x> <y> <z>)+");
      BoundaryOp b{parse_kind(tok[2], line_no), {}};
      for (std::size_t i = 3; i + 3 <= tok.size(); i += 3) {
        b.sites.push_back({parse_int(tok[i], line_no), parse_int(tok[i + 1], line_no),
                           parse_int(tok[i + 2], line_no)});
      }
      if (b.sites.size() > 3) parse_fail(line_no, "boundary op takes at most 3 sites");
      c.ops.emplace_back(std::move(b));
    } else {
      parse_fail(line_no, "unknown op form '" + form + "'");
    }
  }
  if (!have_dims) parse_fail(line_no == 0 ? 1 : line_no, "missing dims line");
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "# " << c.name << "\n";
  out << "dims " << c.dims.nx << " " << c.dims.ny << " " << c.dims.nz << "\n";
  for (const SemiGlobalOp& op : c.ops) {
    if (const auto* g = std::get_if<ColumnGate>(&op)) {
      out << "op col " << gate_name(g->kind) << " " << g->col.x << " " << g->col.y << "\n";
    } else if (const auto* g2 = std::get_if<TwoColumnGate>(&op)) {
      out << "op twocol " << gate_name(g2->kind) << " " << g2->a.x << " " << g2->a.y << " "
          << g2->b.x << " " << g2->b.y << "\n";
    } else if (const auto* layer = std::get_if<VerticalCZLayer>(&op)) {
      out << "op czlayer " << (layer->parity == CZParity::OddEven ? "oe" : "eo") << "\n";
    } else if (std::get_if<GlobalHLayer>(&op)) {
      out << "op hlayer\n";
    } else if (const auto* r = std::get_if<ColumnReset>(&op)) {
      out << "op reset " << r->col.x << " " << r->col.y << "\n";
    } else if (const auto* b = std::get_if<BoundaryOp>(&op)) {
      out << "op boundary " << gate_name(b->kind);
      for (const Site& s : b->sites) out << " " << s.x << " " << s.y << " " << s.z;
      out << "\n";
    } else if (const auto* a = std::get_if<Annotation>(&op)) {
      out << "#@ " << a->text << "\n";
    }
  }
  return out.str();
}

std::string serialize_physical(const PhysicalCircuit& pc) {
  std::ostringstream out;
  out << "qubits " << pc.n_qubits << "\n";
  for (const PhysGate& g : pc.gates) {
    out << "g " << gate_name(g.kind);
    for (int s : g.sites) out << " " << s;
    out << " @t" << g.timestep << " #src" << g.location;
    if (!g.cond.empty()) {
      out << " ?";
      for (std::size_t ci = 0; ci < g.cond.size(); ++ci) {
        if (ci) out << "&";
        for (std::size_t mi = 0; mi < g.cond[ci].size(); ++mi) {
          if (mi) out << "+";
          out << "m" << g.cond[ci][mi];
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_layout(const Layout2D& layout, int planes) {
  std::ostringstream out;
  out << "layout length " << layout.line_length << " planes " << planes << " info";
  for (int p = 0; p < layout.line_length; ++p) {
    if (layout.role_of[static_cast<std::size_t>(p)] == LineRole::Info) out << " " << p;
  }
  out << "\n";
  return out.str();
}

}  // namespace holoqec
