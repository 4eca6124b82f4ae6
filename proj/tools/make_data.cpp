// Regenerates the sample documents under data/.
#include <iostream>
#include <string>

#include <pcoho/io.hpp>
#include <pcoho/samples.hpp>

using namespace pcoho;

int main(int argc, char **argv)
{
    const std::string dir = argc > 1 ? argv[1] : "data";
    auto put = [&](const std::string &name, const io::Payload &p) {
        io::write_file(dir + "/" + name, io::serialize(p));
        std::cout << dir << "/" << name << "\n";
    };

    auto sl = samples::sl2_zero();
    auto line = samples::idempotent_line();
    auto a2 = abelian_algebra(2);
    put("sl2zero.json", sl);
    put("sl2_adjoint.json", adjoint_rep(sl));
    put("a2.json", a2);
    put("trivial.json", trivial_rep(a2, 1));
    put("fixb.json", line);
    put("fixb_adjoint.json", adjoint_rep(line));
    put("truncated_poly.json", samples::truncated_poly());
    put("zero2.json", abelian_algebra(2));

    put("split.json", build_split_extension(sl, adjoint_rep(sl)).first);
    Matrix torus{{1, 0, 0}, {0, 2, 0}, {0, 0, Scalar(1, 2)}};
    put("incompatible.json", io::aut_doc({Matrix::identity(3), torus}));
    put("compatible.json", io::aut_doc({torus, torus}));
    put("derivation_pair.json", io::der_doc({adjoint_rep(sl).rho[0], adjoint_rep(sl).rho[0]}));

    put("reynolds_fixb.json", construct::reynolds(line));
    put("semidirect_fixb.json", construct::semidirect_left(line, adjoint_rep(line)));
    Matrix one = Matrix::identity(1), two = Scalar(2) * Matrix::identity(1);
    put("map_one.json", one);
    put("map_two.json", two);
    put("map_zero.json", Matrix(1, 1));
    put("reynolds_spec.json", spec_for(OperatorKind::Reynolds, line));
    put("deformation_base.json", FormalDeformation{{one}});
    put("deformation_obstructed.json", FormalDeformation{{Matrix(1, 1), one}});
    put("abelian_semidirect.json", construct::semidirect_left(abelian_algebra(1), trivial_rep(abelian_algebra(1), 1)));
    return 0;
}
