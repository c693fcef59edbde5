#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exception.hpp"
#include "types.hpp"

namespace invsg {

  //! Default cap on the number of elements produced by #close.
  inline constexpr std::size_t default_closure_budget = 4096;

  //! A square multiplication table on \f$\{0, ..., n - 1\}\f$ with no
  //! algebraic guarantees attached.
  class CayleyTable {
   public:
    CayleyTable() = default;

    //! \p data is row major: entry `a * n + b` is the product `ab`.
    CayleyTable(std::size_t n, std::vector<index_type> data)
        : _n(n), _data(std::move(data)) {
      if (_data.size() != n * n) {
        throw StructuralError("multiplication table of order "
                              + std::to_string(n) + " needs "
                              + std::to_string(n * n) + " entries, got "
                              + std::to_string(_data.size()));
      }
      for (auto v : _data) {
        if (v >= n) {
          throw StructuralError("multiplication table entry "
                                + std::to_string(v) + " out of range");
        }
      }
    }

    static CayleyTable from_rows(std::vector<std::vector<index_type>> const& rows) {
      std::vector<index_type> data;
      data.reserve(rows.size() * rows.size());
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw StructuralError("multiplication table is not square");
        }
        data.insert(data.end(), row.begin(), row.end());
      }
      return CayleyTable(rows.size(), std::move(data));
    }

    std::size_t size() const noexcept {
      return _n;
    }

    index_type operator()(index_type a, index_type b) const noexcept {
      return _data[a * _n + b];
    }

    std::vector<index_type> const& data() const noexcept {
      return _data;
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    std::size_t             _n = 0;
    std::vector<index_type> _data;
  };

  //! Outcome of #verify_inverse_semigroup.
  struct InverseCertificate {
    enum class Failure {
      none,
      empty,
      not_associative,     //!< witness = (a, b, c)
      no_inverse,          //!< witness = (s)
      inverse_not_unique,  //!< witness = (s, t1, t2)
      inverse_mismatch,    //!< witness = (s, stored, actual)
      idempotents_mismatch,
      order_mismatch,  //!< witness = (s, t)
      zero_mismatch
    };

    Failure                 failure = Failure::none;
    std::vector<index_type> witness;

    bool ok() const noexcept {
      return failure == Failure::none;
    }

    explicit operator bool() const noexcept {
      return ok();
    }

    std::string describe() const {
      std::ostringstream os;
      switch (failure) {
        case Failure::none: return "inverse semigroup";
        case Failure::empty: return "empty table";
        case Failure::not_associative: os << "not associative at"; break;
        case Failure::no_inverse: os << "no generalized inverse for"; break;
        case Failure::inverse_not_unique: os << "generalized inverse not unique for"; break;
        case Failure::inverse_mismatch: os << "stored inverse disagrees for"; break;
        case Failure::idempotents_mismatch: os << "stored idempotents disagree at"; break;
        case Failure::order_mismatch: os << "stored order disagrees at"; break;
        case Failure::zero_mismatch: os << "stored zero disagrees"; break;
      }
      for (auto w : witness) {
        os << ' ' << w;
      }
      return os.str();
    }
  };

  namespace detail {
    // All t with sts = s and tst = t, stopping after two.
    inline std::vector<index_type> generalized_inverses(CayleyTable const& m,
                                                        index_type         s) {
      std::vector<index_type> out;
      auto const              n = static_cast<index_type>(m.size());
      for (index_type t = 0; t < n && out.size() < 2; ++t) {
        if (m(m(s, t), s) == s && m(m(t, s), t) == t) {
          out.push_back(t);
        }
      }
      return out;
    }

    inline std::optional<index_type> absorbing_element(CayleyTable const& m) {
      auto const n = static_cast<index_type>(m.size());
      for (index_type z = 0; z < n; ++z) {
        bool ok = true;
        for (index_type x = 0; x < n && ok; ++x) {
          ok = m(z, x) == z && m(x, z) == z;
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }

    inline std::optional<index_type> identity_element(CayleyTable const& m) {
      auto const n = static_cast<index_type>(m.size());
      for (index_type u = 0; u < n; ++u) {
        bool ok = true;
        for (index_type x = 0; x < n && ok; ++x) {
          ok = m(u, x) == x && m(x, u) == x;
        }
        if (ok) {
          return u;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Checks associativity and that every element has exactly one
  //! generalized inverse. Exhaustive: cubic in the order.
  inline InverseCertificate verify_inverse_semigroup(CayleyTable const& m) {
    using Failure = InverseCertificate::Failure;
    auto const n  = static_cast<index_type>(m.size());
    if (n == 0) {
      return {Failure::empty, {}};
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        auto const ab = m(a, b);
        for (index_type c = 0; c < n; ++c) {
          if (m(ab, c) != m(a, m(b, c))) {
            return {Failure::not_associative, {a, b, c}};
          }
        }
      }
    }
    for (index_type s = 0; s < n; ++s) {
      auto inv = detail::generalized_inverses(m, s);
      if (inv.empty()) {
        return {Failure::no_inverse, {s}};
      }
      if (inv.size() > 1) {
        return {Failure::inverse_not_unique, {s, inv[0], inv[1]}};
      }
    }
    return {};
  }

  //! A finite inverse semigroup stored as a multiplication table with its
  //! inverse involution, idempotents and natural partial order.
  //!
  //! Immutable once constructed.
  class FiniteInverseSemigroup {
   public:
    //! Validates \p table with #verify_inverse_semigroup and throws
    //! StructuralError carrying the certificate if it fails.
    static FiniteInverseSemigroup from_table(CayleyTable              table,
                                             std::vector<std::string> labels = {}) {
      auto cert = verify_inverse_semigroup(table);
      if (!cert) {
        throw StructuralError("not an inverse semigroup: " + cert.describe());
      }
      std::vector<index_type> inv(table.size());
      for (index_type s = 0; s < table.size(); ++s) {
        inv[s] = detail::generalized_inverses(table, s).front();
      }
      return FiniteInverseSemigroup(std::move(table), std::move(inv), std::move(labels));
    }

    //! Trusts that \p inv is the inverse map of \p table; only cheap shape
    //! checks are done. Use #verify_inverse_semigroup to check the rest.
    static FiniteInverseSemigroup from_table_and_inverse(CayleyTable              table,
                                                         std::vector<index_type> inv,
                                                         std::vector<std::string> labels = {}) {
      if (table.size() == 0) {
        throw StructuralError("an inverse semigroup has at least one element");
      }
      if (inv.size() != table.size()) {
        throw StructuralError("inverse map has the wrong length");
      }
      for (auto v : inv) {
        if (v >= table.size()) {
          throw StructuralError("inverse map entry out of range");
        }
      }
      return FiniteInverseSemigroup(std::move(table), std::move(inv), std::move(labels));
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    index_type mul(index_type a, index_type b) const noexcept {
      return _table(a, b);
    }

    index_type inv(index_type s) const noexcept {
      return _inv[s];
    }

    bool is_idempotent(index_type s) const noexcept {
      return _is_idempotent[s];
    }

    index_set const& idempotents() const noexcept {
      return _idempotents;
    }

    //! The natural partial order: \f$s \leqslant t\f$ iff \f$ts^*s = s\f$.
    bool leq(index_type s, index_type t) const noexcept {
      return _leq[s * size() + t];
    }

    std::optional<index_type> zero() const noexcept {
      return _zero;
    }

    std::optional<index_type> identity() const noexcept {
      return _identity;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    //! A group iff there is exactly one idempotent.
    bool is_group() const noexcept {
      return _idempotents.size() == 1;
    }

    bool is_semilattice() const noexcept {
      return _idempotents.size() == size();
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }

    std::vector<index_type> const& inverses() const noexcept {
      return _inv;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The label of \p s, or its index when unlabelled.
    std::string label(index_type s) const {
      return _labels.empty() ? std::to_string(s) : _labels[s];
    }

    //! \f$sS\f$ as a sorted index set.
    index_set right_ideal(index_type s) const {
      index_set out;
      out.reserve(size());
      for (index_type x = 0; x < size(); ++x) {
        out.push_back(mul(s, x));
      }
      detail::normalize(out);
      return out;
    }

    friend bool operator==(FiniteInverseSemigroup const& a,
                           FiniteInverseSemigroup const& b) {
      return a._table == b._table && a._inv == b._inv && a._labels == b._labels;
    }

   private:
    FiniteInverseSemigroup(CayleyTable              table,
                           std::vector<index_type>  inv,
                           std::vector<std::string> labels)
        : _table(std::move(table)), _inv(std::move(inv)), _labels(std::move(labels)) {
      auto const n = static_cast<index_type>(_table.size());
      if (!_labels.empty() && _labels.size() != n) {
        throw StructuralError("label count does not match the order");
      }
      _is_idempotent.assign(n, false);
      for (index_type e = 0; e < n; ++e) {
        if (_table(e, e) == e) {
          _is_idempotent[e] = true;
          _idempotents.push_back(e);
        }
      }
      _leq.assign(static_cast<std::size_t>(n) * n, false);
      for (index_type s = 0; s < n; ++s) {
        auto const ss = _table(_inv[s], s);
        for (index_type t = 0; t < n; ++t) {
          _leq[s * n + t] = _table(t, ss) == s;
        }
      }
      _zero     = detail::absorbing_element(_table);
      _identity = detail::identity_element(_table);
    }

    CayleyTable               _table;
    std::vector<index_type>   _inv;
    std::vector<std::string>  _labels;
    std::vector<bool>         _is_idempotent;
    index_set                 _idempotents;
    std::vector<bool>         _leq;
    std::optional<index_type> _zero;
    std::optional<index_type> _identity;
  };

  //! Re-checks a constructed semigroup: the table axioms plus agreement of
  //! the stored inverse, idempotent set, order relation and zero with what
  //! the table implies.
  inline InverseCertificate verify_inverse_semigroup(FiniteInverseSemigroup const& S) {
    using Failure = InverseCertificate::Failure;
    auto cert     = verify_inverse_semigroup(S.table());
    if (!cert) {
      return cert;
    }
    auto const n = static_cast<index_type>(S.size());
    for (index_type s = 0; s < n; ++s) {
      auto actual = detail::generalized_inverses(S.table(), s).front();
      if (actual != S.inv(s)) {
        return {Failure::inverse_mismatch, {s, S.inv(s), actual}};
      }
      if (S.is_idempotent(s) != (S.mul(s, s) == s)) {
        return {Failure::idempotents_mismatch, {s}};
      }
      for (index_type t = 0; t < n; ++t) {
        if (S.leq(s, t) != (S.mul(t, S.mul(S.inv(s), s)) == s)) {
          return {Failure::order_mismatch, {s, t}};
        }
      }
    }
    if (S.zero() != detail::absorbing_element(S.table())) {
      return {Failure::zero_mismatch, {}};
    }
    return {};
  }

  //! What #close needs from an element type.
  template <typename T>
  concept InverseSemigroupElement = std::equality_comparable<T> && requires(T const& a) {
    { a * a } -> std::convertible_to<T>;
    { inverse(a) } -> std::convertible_to<T>;
    { std::hash<T>{}(a) } -> std::convertible_to<std::size_t>;
  };

  //! A closed semigroup together with the concrete elements behind each
  //! index.
  template <InverseSemigroupElement Element>
  struct Closure {
    FiniteInverseSemigroup semigroup;
    std::vector<Element>   elements;

    std::optional<index_type> index_of(Element const& x) const {
      auto it = std::find(elements.begin(), elements.end(), x);
      if (it == elements.end()) {
        return std::nullopt;
      }
      return static_cast<index_type>(it - elements.begin());
    }
  };

  //! The inverse subsemigroup generated by \p generators.
  //!
  //! Indexing is breadth first: the generators in the given order, then
  //! their inverses in the same order (each skipped if already present),
  //! then for each element `i` in index order and each such letter `g` in
  //! order, the product `elements[i] * g` if it is new.
  //!
  //! \p label maps an element to its display label.
  //!
  //! \throws BudgetExceeded if more than \p budget elements appear.
  template <InverseSemigroupElement Element, typename Labeller>
    requires std::invocable<Labeller, Element const&>
  Closure<Element> close(std::vector<Element> const& generators,
                         Labeller&&                  label,
                         std::size_t                 budget = default_closure_budget) {
    if (generators.empty()) {
      throw ContractError("close needs at least one generator");
    }
    std::vector<Element>                      elements;
    std::unordered_map<Element, index_type>   index;
    auto add = [&](Element const& x) -> bool {
      if (index.contains(x)) {
        return false;
      }
      if (elements.size() >= budget) {
        throw BudgetExceeded("closure element", budget);
      }
      index.emplace(x, static_cast<index_type>(elements.size()));
      elements.push_back(x);
      return true;
    };

    std::vector<Element> letters;
    for (auto const& g : generators) {
      if (add(g)) {
        letters.push_back(g);
      }
    }
    for (auto const& g : generators) {
      auto gi = inverse(g);
      if (add(gi)) {
        letters.push_back(gi);
      }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : letters) {
        add(elements[i] * g);
      }
    }

    auto const              n = elements.size();
    std::vector<index_type> data(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(elements[a] * elements[b]);
        if (it == index.end()) {
          throw InvariantError("closure is not closed under multiplication");
        }
        data[a * n + b] = it->second;
      }
    }
    std::vector<index_type>  inv(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto it = index.find(inverse(elements[a]));
      if (it == index.end()) {
        throw InvariantError("closure is not closed under inversion");
      }
      inv[a] = it->second;
      labels.push_back(label(elements[a]));
    }
    return Closure<Element>{FiniteInverseSemigroup::from_table_and_inverse(
                                CayleyTable(n, std::move(data)),
                                std::move(inv),
                                std::move(labels)),
                            std::move(elements)};
  }

  template <InverseSemigroupElement Element>
  Closure<Element> close(std::vector<Element> const& generators,
                         std::size_t                 budget = default_closure_budget) {
    return close(
        generators,
        [](Element const& x) {
          std::ostringstream os;
          os << x;
          return os.str();
        },
        budget);
  }

}  // namespace invsg
