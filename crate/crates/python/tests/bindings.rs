use std::ffi::CStr;

use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &CStr) {
    Python::attach(|py| {
        let module = wrap_pymodule!(puncodes_py::puncodes_module)(py);
        let locals = PyDict::new(py);
        locals.set_item("pc", module).unwrap();
        if let Err(e) = py.run(code, None, Some(&locals)) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn field_and_function() {
    run(c"
f = pc.Field(7)
g = f.gamma
assert f.mul(g, f.inv(g)) == 1
assert f.log(f.gamma_pow(5)) == 5
assert f.rel_trace(1, 1) == 1
assert f.inv(0) is None
h = pc.Function(7, 'gold(1)')
assert h.is_ab(f) and h.is_apn(f) and h.is_permutation(f)
assert len(h.values(f)) == 128
assert h.walsh(f, 1, 0) == 0
try:
    f.mul(200, 1)
except ValueError:
    pass
else:
    raise AssertionError('out of range element accepted')
");
}

#[test]
fn codes_and_exact_counts() {
    run(c"
c = pc.Code.build(pc.Field(10), pc.Function(10, 'cyclotomic-power(11)'), 'cyclotomic', t=3)
assert (c.n, c.k) == (341, 15)
assert c.min_distance() == 160 and c.dual_distance() == 4
dual = c.dual_weight_distribution()
assert sum(dual) == 2 ** 326 and isinstance(dual[-1], int)
r = pc.Code.from_rows(['1110000', '1001100', '0101010', '1101001'])
assert r.k == 4 and r.min_distance() == 3
assert r.dual().weight_distribution() == [1, 0, 0, 0, 7, 0, 0, 0]
");
}

#[test]
fn verification_and_errors() {
    run(c"
r = pc.verify('ab-levelset-nu1', 7, function='binomial(3,1)', walsh_sign=1)
assert r['verdict'] == 'pass'
assert (r['enumerated']['n'], r['enumerated']['k'], r['enumerated']['d']) == (56, 14, 20)
b = pc.verify_all(m_max=5, moduli={5: 0b111101})
assert b['failed'] == 0 and all(c['field']['modulus'] == 0b111101 for c in b['cases'])
try:
    pc.verify_all(moduli={5: 0b100001})
except pc.PuncodesError as e:
    assert e.kind == 'config'
else:
    raise AssertionError('reducible modulus accepted')
try:
    pc.Function(5, 'nope(1)')
except pc.PuncodesError as e:
    assert e.kind == 'parse'
");
}
