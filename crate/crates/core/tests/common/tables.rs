//! Published moment tables: one cell per (family, moment, rates).

use deqlab_core::numerics::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Moment {
    First,
    Second,
}

#[derive(Debug, Clone, Copy)]
pub struct TableCell {
    pub family: Family,
    pub moment: Moment,
    pub rates: (f64, f64, f64, f64),
    /// Printed values of the simulated, Poisson, Model I and Model II columns.
    pub simulated: &'static str,
    pub simulated_ci: &'static str,
    pub poisson: &'static str,
    pub model_one: &'static str,
    pub model_two: &'static str,
}

pub const TABLE_CELLS: [TableCell; 72] = [
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.0001",
        simulated_ci: "0.0024",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "-0.0178",
        simulated_ci: "0.0243",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "0.1234",
        simulated_ci: "0.2084",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "-0.2352",
        simulated_ci: "0.0022",
        poisson: "-0.2343",
        model_one: "-0.2161",
        model_two: "-0.3333",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "-3.248",
        simulated_ci: "0.0192",
        poisson: "-3.2532",
        model_one: "-3.2251",
        model_two: "-3.3333",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "-33.1485",
        simulated_ci: "0.1754",
        poisson: "-33.3332",
        model_one: "-33.3327",
        model_two: "-33.3333",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "-0.3876",
        simulated_ci: "0.002",
        poisson: "-0.3858",
        model_one: "-0.3178",
        model_two: "-0.5000",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "-4.9779",
        simulated_ci: "0.0157",
        poisson: "-4.9719",
        model_one: "-4.9776",
        model_two: "-5.0000",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "-49.9609",
        simulated_ci: "0.142",
        poisson: "-50",
        model_one: "-50",
        model_two: "-50",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.0004",
        simulated_ci: "0.0017",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "-0.0009",
        simulated_ci: "0.0141",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "-0.1309",
        simulated_ci: "0.1231",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "-0.2736",
        simulated_ci: "0.0015",
        poisson: "-0.2343",
        model_one: "-0.2979",
        model_two: "-0.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "-3.3315",
        simulated_ci: "0.0114",
        poisson: "-3.2532",
        model_one: "-3.3280",
        model_two: "-3.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "-33.4634",
        simulated_ci: "0.1132",
        poisson: "-33.3332",
        model_one: "-33.3333",
        model_two: "-33.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "-0.4375",
        simulated_ci: "0.0013",
        poisson: "-0.3858",
        model_one: "-0.4714",
        model_two: "-0.5000",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "-4.9946",
        simulated_ci: "0.0109",
        poisson: "-4.9719",
        model_one: "-4.9998",
        model_two: "-5.0000",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "-50.0716",
        simulated_ci: "0.1036",
        poisson: "-50",
        model_one: "-50",
        model_two: "-50",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.0117",
        simulated_ci: "0.0024",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "0.0505",
        simulated_ci: "0.0186",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "0.0807",
        simulated_ci: "0.1848",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "-0.2654",
        simulated_ci: "0.002",
        poisson: "-0.2343",
        model_one: "-0.2804",
        model_two: "-0.3333",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "-3.2975",
        simulated_ci: "0.0155",
        poisson: "-3.2532",
        model_one: "-3.3165",
        model_two: "-3.3333",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "-33.1629",
        simulated_ci: "0.1613",
        poisson: "-33.3332",
        model_one: "-33.3333",
        model_two: "-33.3333",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "-0.4285",
        simulated_ci: "0.0018",
        poisson: "-0.3858",
        model_one: "-0.4493",
        model_two: "-0.5000",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "-4.9832",
        simulated_ci: "0.015",
        poisson: "-4.9719",
        model_one: "-4.9983",
        model_two: "-5.0000",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::First,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "-50.089",
        simulated_ci: "0.1507",
        poisson: "-50",
        model_one: "-50",
        model_two: "-50",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.0022",
        simulated_ci: "0.0032",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "-0.0169",
        simulated_ci: "0.0321",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "0.016",
        simulated_ci: "0.3177",
        poisson: "0",
        model_one: "0",
        model_two: "0",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "-0.2039",
        simulated_ci: "0.0028",
        poisson: "-0.2343",
        model_one: "-0.1735",
        model_two: "-0.3333",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "-3.1406",
        simulated_ci: "0.0271",
        poisson: "-3.2532",
        model_one: "-3.1368",
        model_two: "-3.3333",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "-33.2392",
        simulated_ci: "0.237",
        poisson: "-33.3332",
        model_one: "-33.3261",
        model_two: "33.3333",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "-0.3383",
        simulated_ci: "0.0026",
        poisson: "-0.3858",
        model_one: "-0.2866",
        model_two: "-0.5",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "-4.8819",
        simulated_ci: "0.0214",
        poisson: "-4.9719",
        model_one: "-4.8822",
        model_two: "-5",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::First,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "-50.1134",
        simulated_ci: "0.1959",
        poisson: "-50",
        model_one: "-50",
        model_two: "-50",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "1.409",
        simulated_ci: "0.0042",
        poisson: "1.4104",
        model_one: "1",
        model_two: "1",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "11.3894",
        simulated_ci: "0.0838",
        poisson: "11.3045",
        model_one: "10",
        model_two: "10",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "103.2893",
        simulated_ci: "2.2995",
        poisson: "104.0397",
        model_one: "100",
        model_two: "100",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "1.4354",
        simulated_ci: "0.0038",
        poisson: "1.4372",
        model_one: "1.3194",
        model_two: "1.7052",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "21.2369",
        simulated_ci: "0.1458",
        poisson: "21.2498",
        model_one: "21.9505",
        model_two: "27.0518",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "1218.2624",
        simulated_ci: "12.3607",
        poisson: "1211.1069",
        model_one: "1219.4",
        model_two: "1290.5",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "1.4828",
        simulated_ci: "0.0036",
        poisson: "1.4841",
        model_one: "1.7014",
        model_two: "2.6287",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "34.8606",
        simulated_ci: "0.1677",
        poisson: "34.956",
        model_one: "37.3703",
        model_two: "48.7868",
    },
    TableCell {
        family: Family::Exponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "2601.2009",
        simulated_ci: "15.2948",
        poisson: "2600",
        model_one: "2625",
        model_two: "2737.9",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.8254",
        simulated_ci: "0.002",
        poisson: "1.4104",
        model_one: "0.3333",
        model_two: "0.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "4.3492",
        simulated_ci: "0.0336",
        poisson: "11.3045",
        model_one: "3.3333",
        model_two: "3.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "34.6831",
        simulated_ci: "0.7472",
        poisson: "104.0397",
        model_one: "33.3333",
        model_two: "33.3333",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "0.8961",
        simulated_ci: "0.002",
        poisson: "1.4372",
        model_one: "0.3993",
        model_two: "0.6779",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "15.775",
        simulated_ci: "0.0952",
        poisson: "21.2498",
        model_one: "13.8778",
        model_two: "16.7789",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "1148.5144",
        simulated_ci: "7.7166",
        poisson: "1211.1069",
        model_one: "1138.8889",
        model_two: "1167.8",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "1.0102",
        simulated_ci: "0.0021",
        poisson: "1.4841",
        model_one: "0.5019",
        model_two: "1.0429",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "30.1933",
        simulated_ci: "0.1226",
        poisson: "34.956",
        model_one: "27.4992",
        model_two: "32.9289",
    },
    TableCell {
        family: Family::Uniform,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "2551.7944",
        simulated_ci: "10.7995",
        poisson: "2600",
        model_one: "2525",
        model_two: "2579.3",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "0.9304",
        simulated_ci: "0.0064",
        poisson: "1.4104",
        model_one: "0.5000",
        model_two: "0.5000",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "6.0528",
        simulated_ci: "0.1485",
        poisson: "11.3045",
        model_one: "5.0000",
        model_two: "5.0000",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "48.0992",
        simulated_ci: "4.4079",
        poisson: "104.0397",
        model_one: "50.0000",
        model_two: "50.0000",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "0.9857",
        simulated_ci: "0.0056",
        poisson: "1.4372",
        model_one: "0.5526",
        model_two: "0.8550",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "16.5479",
        simulated_ci: "0.1894",
        poisson: "21.2498",
        model_one: "15.2503",
        model_two: "18.5501",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "1158.5",
        simulated_ci: "16.5071",
        poisson: "1211.1069",
        model_one: "1152.8",
        model_two: "1185.5",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "1.0728",
        simulated_ci: "0.0052",
        poisson: "1.4841",
        model_one: "0.6375",
        model_two: "1.2411",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "31.4929",
        simulated_ci: "0.2351",
        poisson: "34.956",
        model_one: "28.7436",
        model_two: "34.9112",
    },
    TableCell {
        family: Family::Erlang { k: 2 },
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "2542.1",
        simulated_ci: "20.576",
        poisson: "2600",
        model_one: "2567.3",
        model_two: "2599.1",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 1.0, 1.0),
        simulated: "1.9943",
        simulated_ci: "0.0063",
        poisson: "1.4104",
        model_one: "2",
        model_two: "2",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.1, 0.1),
        simulated: "20.8656",
        simulated_ci: "0.1625",
        poisson: "11.3045",
        model_one: "20",
        model_two: "20",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.0, 0.01, 0.01),
        simulated: "205.774",
        simulated_ci: "4.7111",
        poisson: "104.0397",
        model_one: "200",
        model_two: "200",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 1.0, 1.5),
        simulated: "1.9962",
        simulated_ci: "0.0057",
        poisson: "1.4372",
        model_one: "2.0092",
        model_two: "2.4491",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.1, 0.15),
        simulated: "29.4329",
        simulated_ci: "0.1921",
        poisson: "21.2498",
        model_one: "28.0112",
        model_two: "34.4908",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 1.5, 0.01, 0.015),
        simulated: "1307.8225",
        simulated_ci: "16.5066",
        poisson: "1211.1069",
        model_one: "1277.5943",
        model_two: "1344.9",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 1.0, 2.0),
        simulated: "2.0048",
        simulated_ci: "0.0048",
        poisson: "1.4841",
        model_one: "2.0252",
        model_two: "3.0251",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.1, 0.2),
        simulated: "41.5526",
        simulated_ci: "0.2282",
        poisson: "34.956",
        model_one: "39.8704",
        model_two: "52.7513",
    },
    TableCell {
        family: Family::HyperExponential,
        moment: Moment::Second,
        rates: (1.0, 2.0, 0.01, 0.02),
        simulated: "2660.7665",
        simulated_ci: "20.4434",
        poisson: "2600",
        model_one: "2649.9986",
        model_two: "2777.5",
    },
];
