#include "drw/cli/json_io.hpp"

#include <stdexcept>

namespace drw::cli {

using nlohmann::json;

json to_json(const DRWElement& x) {
  const Context& ctx = x.context();
  json terms = json::array();
  for (const auto& [key, eta] : x.terms()) {
    json a = json::array();
    for (const auto& entry : key.weight().entries()) a.push_back({entry.mantissa, entry.vexp});
    json I = json::array();
    for (Index i : key.partition().indices()) I.push_back(i + 1);
    terms.push_back({{"eta", eta.residue()}, {"a", std::move(a)}, {"I", std::move(I)}});
  }
  return {{"p", ctx.p}, {"n", ctx.nvars}, {"M", ctx.precision}, {"terms", std::move(terms)}};
}

DRWElement from_json(const json& j) {
  try {
    Context ctx{j.at("p").get<unsigned>(), j.at("n").get<std::size_t>(), j.at("M").get<unsigned>()};
    ctx.validate();
    DRWElement x(ctx);
    for (const auto& t : j.at("terms")) {
      const auto& a = t.at("a");
      if (a.size() != ctx.nvars) throw std::invalid_argument("weight has the wrong number of entries");
      std::vector<PAdicRational> entries;
      for (const auto& e : a) {
        if (e.size() != 2) throw std::invalid_argument("weight entries are [mantissa, vexp] pairs");
        entries.push_back(PAdicRational::make(ctx.p, e[0].get<std::uint64_t>(), e[1].get<std::int32_t>()));
      }
      WeightFunction w(ctx.p, std::move(entries));
      IndexSet idx;
      for (const auto& i : t.at("I")) {
        auto k = i.get<std::size_t>();
        if (k < 1 || k > ctx.nvars) throw std::invalid_argument("partition index out of range");
        idx.push_back(k - 1);
      }
      Partition I = Partition::of(w, std::move(idx));
      x.add_term(TermKey(std::move(w), std::move(I)), ctx.scalar(t.at("eta").get<std::uint64_t>()));
    }
    return x;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  }
}

json to_json(const ExtendedRational& q) { return q.str(); }

}  // namespace drw::cli
