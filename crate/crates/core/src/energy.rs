//! First-order radio energy model.
//!
//! Transmitting `k` bits over distance `d` costs `k*elec + k*amp*d^2`;
//! receiving `k` bits costs `k*elec`. During lifetime simulation a cluster
//! head additionally pays an aggregation cost per received bit before
//! forwarding one fused packet to the sink.
//!
//! Packet sizes are `NonZeroU32`: a zero-bit message is rejected at the type
//! level rather than at call time.

use serde::{Deserialize, Serialize};
use std::num::NonZeroU32;

/// How many receptions a head is billed in the cluster transfer figure when
/// `m` members each send it one packet.
///
/// The optimizer's objective bills `m - 1` receptions by default; the
/// alternative bills one reception per member packet, the physically
/// complete accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReceiveCount {
    OneLessThanMembers,
    PerMember,
}

/// Radio and battery parameters shared by every protocol in the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RadioModel {
    /// Electronics energy per bit, transmit or receive (J/bit).
    pub electronics_j_per_bit: f64,
    /// Amplifier energy per bit per square meter (J/bit/m^2).
    pub amplifier_j_per_bit_m2: f64,
    /// Aggregation cost a head pays per received bit (J/bit).
    /// Applies to lifetime simulation only, never to the transfer figure.
    pub aggregation_j_per_bit: f64,
    /// Battery charge each node starts with (J).
    pub initial_node_energy: f64,
    /// Reception accounting inside [`RadioModel::cluster_transfer`].
    pub receive_count: ReceiveCount,
}

impl Default for RadioModel {
    fn default() -> Self {
        RadioModel {
            electronics_j_per_bit: 50e-9,
            amplifier_j_per_bit_m2: 100e-12,
            aggregation_j_per_bit: 5e-9,
            initial_node_energy: 0.5,
            receive_count: ReceiveCount::OneLessThanMembers,
        }
    }
}

impl RadioModel {
    pub fn validate(&self) -> crate::error::Result<()> {
        let nonneg = [
            ("electronics_j_per_bit", self.electronics_j_per_bit),
            ("amplifier_j_per_bit_m2", self.amplifier_j_per_bit_m2),
            ("aggregation_j_per_bit", self.aggregation_j_per_bit),
        ];
        for (name, v) in nonneg {
            if v.is_nan() || v < 0.0 {
                return Err(crate::error::Error::InvalidConfig(format!(
                    "{name} must be non-negative, got {v}"
                )));
            }
        }
        if self.initial_node_energy.is_nan() || self.initial_node_energy <= 0.0 {
            return Err(crate::error::Error::InvalidConfig(format!(
                "initial_node_energy must be positive, got {}",
                self.initial_node_energy
            )));
        }
        Ok(())
    }

    /// Energy to transmit `bits` over distance `d` meters.
    pub fn transmit(&self, bits: NonZeroU32, d: f64) -> f64 {
        let k = bits.get() as f64;
        k * self.electronics_j_per_bit + k * self.amplifier_j_per_bit_m2 * d * d
    }

    /// Energy to receive `bits`.
    pub fn receive(&self, bits: NonZeroU32) -> f64 {
        bits.get() as f64 * self.electronics_j_per_bit
    }

    /// Energy to aggregate one received packet of `bits`.
    pub fn aggregate(&self, bits: NonZeroU32) -> f64 {
        bits.get() as f64 * self.aggregation_j_per_bit
    }

    /// Receptions billed in the transfer figure for `m` member packets.
    pub fn billed_receptions(&self, members: usize) -> usize {
        match self.receive_count {
            ReceiveCount::OneLessThanMembers => members.saturating_sub(1),
            ReceiveCount::PerMember => members,
        }
    }

    /// Transfer energy of one round of traffic in one cluster: every member
    /// transmits to the head over its own distance, the head is billed
    /// [`RadioModel::billed_receptions`] receptions and one transmission to
    /// the sink. `member_distances` excludes the head; an empty slice is a
    /// lone head talking straight to the sink. Aggregation cost is
    /// deliberately absent from this figure.
    pub fn cluster_transfer(
        &self,
        bits: NonZeroU32,
        member_distances: &[f64],
        head_to_sink: f64,
    ) -> f64 {
        let uplinks: f64 = member_distances
            .iter()
            .map(|&d| self.transmit(bits, d))
            .sum();
        let receptions =
            self.billed_receptions(member_distances.len()) as f64 * self.receive(bits);
        uplinks + receptions + self.transmit(bits, head_to_sink)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn bits(n: u32) -> NonZeroU32 {
        NonZeroU32::new(n).unwrap()
    }

    // Golden values computed by hand from the per-bit constants before this
    // module was written.
    const TX_2000_AT_100M: f64 = 0.0021;
    const RX_2000: f64 = 9.999999999999999e-05;
    const CLUSTER_M3_GOLDEN: f64 = 0.0028799999999999997;

    #[test]
    fn transmit_matches_golden_value() {
        let m = RadioModel::default();
        // 2000 * 50e-9 + 2000 * 100e-12 * 100^2 = 1e-4 + 2e-3.
        assert_relative_eq!(
            m.transmit(bits(2000), 100.0),
            TX_2000_AT_100M,
            max_relative = 1e-12
        );
        assert_relative_eq!(m.transmit(bits(2000), 0.0), RX_2000, max_relative = 1e-12);
    }

    #[test]
    fn receive_matches_golden_value() {
        let m = RadioModel::default();
        assert_relative_eq!(m.receive(bits(2000)), RX_2000, max_relative = 1e-12);
        assert_relative_eq!(m.receive(bits(1)), 50e-9, max_relative = 1e-12);
    }

    #[test]
    fn receive_equals_transmit_at_zero_distance() {
        let m = RadioModel::default();
        assert_eq!(m.receive(bits(1234)), m.transmit(bits(1234), 0.0));
    }

    #[test]
    fn aggregate_is_linear_in_bits() {
        let m = RadioModel::default();
        assert_relative_eq!(m.aggregate(bits(2000)), 2000.0 * 5e-9, max_relative = 1e-12);
    }

    #[test]
    fn cluster_transfer_matches_golden_value() {
        // Three members at 10, 20, 30 m; head 100 m from the sink; default
        // radio; 2000-bit packets; two billed receptions.
        let m = RadioModel::default();
        let e = m.cluster_transfer(bits(2000), &[10.0, 20.0, 30.0], 100.0);
        // (1.2e-4 + 1.8e-4 + 2.8e-4) + 2*1e-4 + 2.1e-3
        assert_relative_eq!(e, CLUSTER_M3_GOLDEN, max_relative = 1e-12);
    }

    #[test]
    fn single_member_cluster_bills_no_reception() {
        let m = RadioModel::default();
        let e = m.cluster_transfer(bits(2000), &[7.0], 3.0);
        let expected = m.transmit(bits(2000), 7.0) + m.transmit(bits(2000), 3.0);
        assert_relative_eq!(e, expected, max_relative = 1e-12);
    }

    #[test]
    fn lone_head_transmits_straight_to_sink() {
        let m = RadioModel::default();
        let e = m.cluster_transfer(bits(2000), &[], 50.0);
        assert_relative_eq!(e, m.transmit(bits(2000), 50.0), max_relative = 1e-12);
    }

    #[test]
    fn per_member_accounting_bills_one_extra_reception() {
        let per_member = RadioModel {
            receive_count: ReceiveCount::PerMember,
            ..RadioModel::default()
        };
        let printed = RadioModel::default();
        let a = per_member.cluster_transfer(bits(2000), &[10.0, 20.0, 30.0], 100.0);
        let b = printed.cluster_transfer(bits(2000), &[10.0, 20.0, 30.0], 100.0);
        assert_relative_eq!(a, b + printed.receive(bits(2000)), max_relative = 1e-12);
        assert_eq!(per_member.billed_receptions(0), 0);
        assert_eq!(printed.billed_receptions(0), 0);
        assert_eq!(per_member.billed_receptions(1), 1);
        assert_eq!(printed.billed_receptions(1), 0);
    }

    #[test]
    fn validate_rejects_bad_coefficients() {
        assert!(RadioModel::default().validate().is_ok());
        let negative = RadioModel {
            electronics_j_per_bit: -1e-9,
            ..RadioModel::default()
        };
        assert!(negative.validate().is_err());
        let flat = RadioModel {
            initial_node_energy: 0.0,
            ..RadioModel::default()
        };
        assert!(flat.validate().is_err());
    }

    proptest! {
        #[test]
        fn transmit_is_monotone_in_distance(d1 in 0.0f64..500.0, d2 in 0.0f64..500.0) {
            let m = RadioModel::default();
            let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
            prop_assert!(m.transmit(bits(2000), lo) <= m.transmit(bits(2000), hi));
        }

        #[test]
        fn transfer_splits_into_its_three_terms(
            ds in proptest::collection::vec(0.0f64..300.0, 0..6),
            sink_d in 0.0f64..300.0,
        ) {
            let m = RadioModel::default();
            let whole = m.cluster_transfer(bits(2000), &ds, sink_d);
            let parts: f64 = ds.iter().map(|&d| m.transmit(bits(2000), d)).sum::<f64>()
                + m.billed_receptions(ds.len()) as f64 * m.receive(bits(2000))
                + m.transmit(bits(2000), sink_d);
            prop_assert!((whole - parts).abs() <= 1e-15);
            prop_assert!(whole >= 0.0);
        }

        #[test]
        fn closer_members_never_cost_more(
            ds in proptest::collection::vec(1.0f64..300.0, 1..6),
            idx in 0usize..6,
            shrink in 0.0f64..1.0,
            sink_d in 0.0f64..300.0,
        ) {
            let m = RadioModel::default();
            let idx = idx % ds.len();
            let mut closer = ds.clone();
            closer[idx] *= shrink;
            prop_assert!(
                m.cluster_transfer(bits(2000), &closer, sink_d)
                    <= m.cluster_transfer(bits(2000), &ds, sink_d)
            );
        }
    }
}
