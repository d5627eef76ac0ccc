#include "catalog.hpp"
#include "recurrences.hpp"

namespace permav {

namespace {

Expr X() { return xpow(1); }
Expr om(int k) { return pow(p({1, -1}), k); }
Expr S() { return sqrt(p({1, -4})); }

FilterSpec filter(const std::string& text) { return FilterSpec::parse(text); }

Series from_counts(const CountTable& t, int order) {
  Series s(order);
  for (int n = 0; n < order; ++n) s[n] = t.at(n);
  return s;
}

Engine table_engine(const std::string& name, CountTable (*fn)(int)) {
  return {name, "main", [fn](int order) { return from_counts(fn(std::max(order - 1, 2)), order); }};
}

struct Builder {
  Catalog& cat;

  void operator()(int id, const std::string& patterns, Expr main, std::vector<Auxiliary> aux = {},
                  std::vector<Engine> engines = {}) {
    cat.add({id, PatternSet::parse(patterns), std::move(main), std::move(aux), std::move(engines)});
  }
};

Expr f77() {
  return p({1, -11, 53, -145, 248, -274, 192, -80, 17}) / (om(6) * pow(p({1, -2}), 3));
}

Expr f90() {
  return p({1, -11, 51, -129, 195, -183, 104, -30, 3}) / (om(4) * p({1, -2}) * pow(p({1, -3, 1}), 2));
}

Expr f103() { return p({1, -9, 35, -77, 107, -97, 55, -17, 1}) / (om(5) * p({1, -4, 5, -3})) * C(); }

Expr f106() { return p({1, -2}) * p({1, -6, 12, -9, 4}) / (om(3) * p({1, -3}) * p({1, -3, 1})); }

Expr f118() {
  return p({1, -12, 64, -198, 393, -521, 463, -269, 95, -17}) / (om(7) * pow(p({1, -2}), 3));
}

Expr f130() { return p({1, -9, 32, -58, 58, -33, 8}) / (om(4) * p({1, -2}) * p({1, -4, 2})); }

Expr f131() {
  return p({1, -4, 7, -6, 1, 2}) / (p({1, -2}) * om(3)) * C() - p({0, 1, -2, 1, -1, 2}) / (p({1, -2}) * om(4));
}

Expr f133() { return p({1, -2}) * p({1, -3, 1}) / p({1, -6, 11, -7}); }

Expr f159() {
  return p({1, -11, 48, -104, 115, -61, 13}) / (om(1) * p({1, -2}) * p({1, -3}) * pow(p({1, -3, 1}), 2));
}

Expr f162() { return p({1, -7, 18, -21, 11}) / (p({1, -2}) * p({1, -6, 12, -11, 3})); }

Expr f163() {
  return (pow(p({1, -3, 3}), 2) * C() - X() * om(1) * p({1, -3, 5, -4})) / (om(5) * p({1, -2}));
}

Expr f164() {
  return (om(4) * p({1, -2}) * C() - X() * p({1, -4, 6, -5})) / (om(1) * p({1, -2}) * p({1, -4, 5, -3}));
}

Expr f165() { return (p({1, -2}) * om(4) * C() - X() * p({1, -4, 6, -5, 1})) / (om(4) * p({1, -3, 1})); }

Expr f176() {
  return divx((om(2) * p({1, -4, 6, -5, 1}) * C() + p({-1, 6, -14, 15, -8, 1})) / (p({1, -3, 1}) * p({1, -1, 0, 1})),
              1);
}

Expr f178() {
  const Expr rhs = 1 - X() + X() * pow(C() - 1, 2) + xpow(4) * pow(C(), 5) * (C() - 1) - xpow(3) / p({1, -2}) +
                   xpow(3) * pow(C(), 4);
  return rhs / (p({1, -2}) - xpow(3) / p({1, -2}));
}

Expr f182() { return (1 + xpow(2) * om(1) * pow(C(), 4)) / (1 - X() * p({1, -2}) * pow(C(), 2)); }

Expr f190() { return p({1, -2}) * pow(p({1, -3, 1}), 2) / (om(1) * p({1, -8, 22, -24, 8, -1})); }

Expr f192() { return divx((p({1, -5, 9, -6}) * (C() - 1) - xpow(3)) / (p({1, -2}) * om(2)), 1); }

Expr f198() {
  return divx((p({1, -7, 18, -19, 6}) * C() - p({1, -6, 12, -8, 1})) / (om(1) * p({1, -2})), 2);
}

Expr f204() {
  return (X() * p({1, -2, 2}) * C() - p({1, -3, 3})) / (X() * p({1, -2, 2}) * C() - om(1) * p({1, -3, 3}));
}

Expr f214() {
  return divx(p({1, -2}) * (p({1, -5, 9, -6}) * S() - p({1, -9, 29, -38, 18})) / (2 * om(2) * p({1, -7, 14, -9})), 1);
}

Expr f226() { return divx((p({1, -3, 1}) - sqrt(p({1, -7, 13, -8}) * p({1, -3, 1}))) / (2 * om(1) * p({1, -2})), 1); }

// H_{d,0}: first letter n-1-d, second letter n, d+1 right-left maxima.
Expr h198(int d) {
  Expr e = xpow(d + 2) * C();
  for (int j = 1; j <= d - 1; ++j) e = e + xpow(d + 2) * (C() - 1) / om(j);
  return e;
}

}  // namespace

void register_builtin_cases(Catalog& catalog) {
  Builder add{catalog};

  {
    const Expr H = xpow(2) * p({1, -4, 5}) / pow(p({1, -2}), 3);
    const Expr J = p({0, 0, 0, 1, -4, 9, -11, 6, -2}) / (om(5) * pow(p({1, -2}), 2));
    add(77, "1243,2314,3412", f77(),
        {{"H", H, filter("start1==n-1")},
         {"J", J, filter("lrmax==2;start1<=n-2")},
         {"G2", xpow(2) * p({1, -8, 29, -58, 66, -43, 15, -1}) / (pow(p({1, -2}), 3) * om(5)), filter("lrmax==2")},
         {"G3", xpow(3) * om(2) / pow(p({1, -2}), 3), filter("lrmax==3")}});
  }

  add(90, "1243,2431,3412", f90(),
      {{"SumH", xpow(3) * p({1, -2}) / pow(p({1, -3, 1}), 2), filter("lrtop==1;lrmax>=2;lastmax==0")}});

  add(103, "1423,2341,3124", f103(),
      {{"G2", (X() * C() - X()) * f103(), filter("lrmax==2")}, {"G3", xpow(3) / om(5), filter("lrmax==3")}});

  {
    const Expr H = xpow(2) * (xpow(2) + om(3) * f106()) / om(4);
    const Expr J = xpow(2) * p({1, -2}) / (om(1) * p({1, -3}));
    add(106, "1342,2143,3412", f106(),
        {{"H", H, filter("start1==n-1")},
         {"J", J, filter("start2==n")},
         {"G2", H + J - xpow(2) / om(1), filter("lrmax==2")}});
  }

  add(118, "1423,1234,3412", f118(),
      {{"SumJ", xpow(2) * p({1, -7, 22, -35, 29, -13}) / (om(4) * pow(p({1, -2}), 3)), filter("rlsuffix==1;rlmax>=2")},
       {"J1", X() * (1 + X() * p({1, -4, 7, -5, 2}) / (om(4) * p({1, -2}))), filter("lastmax==1")}},
      {{"j_recurrence", "SumJ", [](int order) { return case118_J_recurrence(order, order + 1); }}});

  add(130, "1342,3124,3412", f130(),
      {{"H", xpow(2) * p({1, -3, 1}) / (om(1) * p({1, -4, 2})), filter("start2==n")},
       {"K", xpow(3) * om(1) / p({1, -3, 1}), filter("start2==n;end1==n-1")}});

  add(131, "2134,1423,2341", f131(), {}, {table_engine("table", &case131_counts)});

  add(133, "1342,2143,2314", f133());

  add(159, "1243,1342,3412", f159(),
      {{"J", xpow(2) * p({1, -2}) / (om(1) * p({1, -3})), filter("start2==n")},
       {"G2",
        xpow(3) * p({1, -4, 3, 1}) / (om(2) * p({1, -2}) * p({1, -3}) * p({1, -3, 1})) + xpow(2) * f159() / om(1),
        filter("lrmax==2")}});

  add(162, "3412,1423,2341", f162(),
      {{"G2",
        xpow(6) / (pow(p({1, -2}), 2) * om(4)) + xpow(2) * p({1, -3, 4, -1}) * f162() / (p({1, -2}) * om(3)),
        filter("lrmax==2")}});

  add(163, "1342,2314,3412", f163(),
      {{"G2", X() * (p({1, -4, 7, -7, 4}) * C() + p({-1, 4, -8, 9, -4})) / (om(4) * p({1, -2})), filter("lrmax==2")}});

  add(164, "1432,2431,3214", f164(), {}, {table_engine("table", &case164_counts)});

  add(165, "1342,2314,3421", f165(),
      {{"G2",
        xpow(2) * (om(1) * p({1, -3, 2}) * pow(C(), 2) - X() * p({1, -3, 1})) / (om(3) * p({1, -3, 1})),
        filter("lrmax==2")}});

  add(175, "1423,2341,3142", p({1, -6, 12, -11, 5}) / p({1, -7, 17, -20, 12, -2}));

  add(176, "1342,2431,3412", f176());

  {
    const Expr H = X() * pow(C() - 1, 2) + xpow(4) * pow(C(), 5) * (C() - 1);
    add(178, "1342,2314,2431", f178(),
        {{"H", H, filter("lrmax==2;start1<=n-2")}, {"G2", X() * (f178() - 1) + H, filter("lrmax==2")}});
  }

  add(182, "2314,2431,3412", f182(),
      {{"H", X() * C() - X(), filter("start1==n-1")},
       {"G2", X() * C() - X() + xpow(2) * C() * (f182() - 1) + xpow(3) * pow(C(), 2) * (f182() - 1) / om(1),
        filter("lrmax==2")}});

  add(190, "3142,2314,1423", f190(),
      {{"G2", xpow(2) * p({1, -4, 5, -1}) * f190() / (p({1, -3, 1}) * p({1, -2}) * om(1)), filter("lrmax==2")}});

  add(192, "1243,1342,2431", f192(),
      {{"G2", X() * (f192() - 1) + xpow(3) * f192() / p({1, -2}) + xpow(4) / (om(1) * pow(p({1, -2}), 2)),
        filter("lrmax==2")}});

  add(194, "3124,4123,1243",
      divx((p({1, -5, 9, -8, 4}) * C() - p({1, -5, 9, -6, 1})) / pow(p({1, -2}), 2), 1), {},
      {table_engine("table", &case194_counts)});

  add(197, "2413,3241,2134",
      (p({1, -5, 9, -7, 1}) + p({1, -5, 9, -9, 3}) * S()) /
          (om(1) * (p({1, -6, 12, -11, 3}) + p({1, -4, 6, -5, 1}) * S())));

  add(198, "1234,1423,2341", f198(),
      {{"G2", p({-1, 5, -7, 1}) / (om(1) * p({1, -2})) - p({-1, 6, -9, 3}) * C() / om(2) + X() * C() * f198(),
        filter("lrmax==2")},
       {"H10", h198(1), filter("start1==n-2;start2==n;rlmax==2")},
       {"H20", h198(2), filter("start1==n-3;start2==n;rlmax==3")},
       {"H30", h198(3), filter("start1==n-4;start2==n;rlmax==4")}});

  add(199, "1243,1423,2341",
      (X() * om(2) * p({-1, 2}) * C() + p({1, -5, 9, -7, 3})) / ((X() * C() - om(2)) * om(2) * p({-1, 2})), {},
      {table_engine("table", &case199_counts)});

  add(204, "1243,1423,2314", f204(), {{"G2", X() * C() * (f204() - 1), filter("lrmax==2")}});

  add(208, "1234,1342,3124",
      (p({1, -2}) * p({1, -6, 12, -10, 2}) - xpow(2) * pow(p({1, -2, 2}), 2) * C()) /
          p({1, -9, 30, -49, 38, -8, -4}));

  add(214, "1342,2341,3412", f214(),
      {{"G2",
        xpow(2) * f214() * C() + xpow(3) * pow(C(), 2) * (f214() - 1) / p({1, -2}) +
            xpow(3) * pow(C(), 2) / p({1, -2}) - xpow(3) * pow(C(), 2) / om(2) +
            xpow(3) * C() / (om(1) * (1 - X() - X() * C())),
        filter("lrmax==2")}});

  add(217, "4132,1342,1243",
      divx((om(1) * p({1, -3, 1}) * S() - p({1, -8, 20, -15, 4})) / (2 * om(1) * p({1, -5, 4, -1})), 1));

  add(219, "1342,2413,3412",
      1 + X() * om(2) * p({1, -2}) / (p({1, -3, 1}) * p({1, -2, 2}) - X() * p({1, -2}) * om(1) * C()));

  add(220, "2431,2314,3142",
      1 + X() * om(2) * p({1, -2}) / (p({1, -3}) * om(3) - X() * p({1, -2}) * p({1, -1, 1}) * (C() - 1)));

  add(222, "3412,3421,1342",
      (p({2, -11, 13, -6}) + om(1) * X() * p({1, -6, 4}) / S()) / (2 * p({1, -6, 8, -4})), {},
      {table_engine("forest", &case222_counts)});

  add(223, "1243,1342,2413",
      divx(p({1, -2}) * (p({1, -2}) - sqrt(p({1, -8, 20, -20, 4}))) / (2 * p({1, -4, 5, -1})), 1));

  add(224, "4132,1342,1423", (p({2, -10, 9, -3}) + X() * om(1) * p({2, -1}) * S()) / (2 * p({1, -5, 4, 0, -1})));

  {
    const Expr K = p({1, -2}) / p({1, -3, 1});
    add(226, "1342,2143,2413", f226(),
        {{"SumH", X() * (f226() - 1) * compose(C(), X() + xpow(2) * (K - 1) / om(1)), filter("lrtop==1;lrmax>=2")}});
  }

  add(232, "1234,1342,2341", divx((p({1, -4, 2}) - p({1, -6, 9}) * C()) / p({1, -4}), 1), {},
      {table_engine("table", &case232_counts)});

  add(242, "2341,2431,3241", Expr::external("fixed_point", &case242_fixed_point), {},
      {{"sum", "main", &case242_sum_series}, {"fixed_point", "main", &case242_fixed_point}});
}

}  // namespace permav
