// Copyright 2026 The Proxikey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proxikey/search/query_plan.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::search {

std::vector<Subquery> expand_subqueries(std::span<const std::string> words,
                                        const text::Dictionary& dict, const lexicon::FLList& fl,
                                        const lexicon::LexiconConfig& cfg) {
  if (words.empty()) throw UnsupportedQuery("empty query");
  if (words.size() > kMaxQueryWords) {
    throw UnsupportedQuery(
        fmt::format("query has {} words; at most {} are supported", words.size(), kMaxQueryWords));
  }
  std::vector<std::vector<LemmaId>> alternatives;
  for (const auto& word : words) {
    std::vector<LemmaId> stops;
    for (const auto& lemma : dict.lemmatize(word)) {
      const auto id = fl.rank(lemma);
      if (id && lexicon::classify_rank(*id, cfg) == lexicon::LemmaClass::kStop &&
          std::find(stops.begin(), stops.end(), *id) == stops.end()) {
        stops.push_back(*id);
      }
    }
    if (stops.empty()) {
      throw UnsupportedQuery(
          fmt::format("query is not stop-only: '{}' has no stop lemma", word));
    }
    alternatives.push_back(std::move(stops));
  }

  std::vector<Subquery> out;
  std::set<std::vector<LemmaId>> seen;
  std::vector<size_t> choice(alternatives.size(), 0);
  while (true) {
    Subquery sq;
    for (size_t i = 0; i < alternatives.size(); ++i) sq.lemmas.push_back(alternatives[i][choice[i]]);
    if (seen.insert(sq.lemmas).second) out.push_back(std::move(sq));
    // Odometer with the last word varying fastest.
    size_t i = alternatives.size();
    while (i > 0) {
      --i;
      if (++choice[i] < alternatives[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::optional<uint32_t> QueryPlan::local_of(LemmaId lemma) const {
  const auto it = std::find(local_lemmas.begin(), local_lemmas.end(), lemma);
  if (it == local_lemmas.end()) return std::nullopt;
  return static_cast<uint32_t>(it - local_lemmas.begin());
}

namespace {

// Best slot among those passing `accept`. `most_frequent` picks the lowest
// FL-number, otherwise the highest; ties go to the lowest index.
template <typename Accept>
std::optional<uint32_t> pick(const std::vector<LemmaId>& lemmas, bool most_frequent,
                             Accept&& accept) {
  std::optional<uint32_t> best;
  for (uint32_t i = 0; i < lemmas.size(); ++i) {
    if (!accept(i)) continue;
    if (!best) {
      best = i;
    } else if (most_frequent ? lemmas[i] < lemmas[*best] : lemmas[i] > lemmas[*best]) {
      best = i;
    }
  }
  return best;
}

}  // namespace

QueryPlan select_keys(const Subquery& subquery) {
  const auto& lemmas = subquery.lemmas;
  if (lemmas.size() < 2) throw UnsupportedQuery("unsupported single-lemma stop query");

  QueryPlan plan;
  plan.subquery = subquery;
  for (LemmaId lemma : lemmas) {
    if (const auto local = plan.local_of(lemma)) {
      ++plan.required[*local];
    } else {
      plan.local_lemmas.push_back(lemma);
      plan.required.push_back(1);
    }
  }
  if (plan.local_lemmas.size() > 64) {
    throw UnsupportedQuery("subquery has more than 64 distinct lemmas");
  }

  std::set<LemmaId> used;
  auto unused = [&](uint32_t i) { return !used.contains(lemmas[i]); };

  while (true) {
    const auto first = pick(lemmas, /*most_frequent=*/true, unused);
    if (!first) break;

    std::array<PlanComponent, 3> chosen;
    chosen[0] = PlanComponent{lemmas[*first], false, *first};
    used.insert(lemmas[*first]);

    auto select = [&](auto&& index_ok) -> PlanComponent {
      if (const auto i = pick(lemmas, false, [&](uint32_t j) { return index_ok(j) && unused(j); })) {
        used.insert(lemmas[*i]);
        return PlanComponent{lemmas[*i], false, *i};
      }
      const auto i = pick(lemmas, false, index_ok);
      PROXIKEY_CHECK(i.has_value(), "key selection found no candidate");
      return PlanComponent{lemmas[*i], true, *i};
    };

    chosen[1] = select([&](uint32_t j) { return j != chosen[0].slot; });
    const bool third_has_fresh_index = lemmas.size() >= 3;
    chosen[2] = third_has_fresh_index
                    ? select([&](uint32_t j) { return j != chosen[0].slot && j != chosen[1].slot; })
                    : PlanComponent{chosen[1].lemma, true, chosen[1].slot};

    // Physical order: by FL-number; among equal lemmas non-starred first, then
    // selection order.
    std::array<PlanComponent, 3> physical = chosen;
    std::stable_sort(physical.begin(), physical.end(),
                     [](const PlanComponent& a, const PlanComponent& b) {
                       if (a.lemma != b.lemma) return a.lemma < b.lemma;
                       return !a.starred && b.starred;
                     });
    PlanKey key;
    key.key = TriKey{physical[0].lemma, physical[1].lemma, physical[2].lemma};
    key.components = physical;
    plan.keys.push_back(key);
  }
  return plan;
}

std::string format_plan_key(const PlanKey& key, const lexicon::FLList& fl) {
  auto part = [&](const PlanComponent& c) {
    return fmt::format("{}{}", fl.lemma(c.lemma), c.starred ? "*" : "");
  };
  return fmt::format("({}, {}, {})", part(key.components[0]), part(key.components[1]),
                     part(key.components[2]));
}

}  // namespace proxikey::search
