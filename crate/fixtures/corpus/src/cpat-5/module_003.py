
def step_42(cfg):
    v0_s42 = {}
    for v1_s42 in v2_s42:
        if v1_s42 in v0_s42:
            v0_s42[v1_s42] = v0_s42[v1_s42] + [v3_s42(v1_s42)]
        else:
            v0_s42[v1_s42] = [v3_s42(v1_s42)]
    return cfg

def step_122(cfg):
    v0_s122 = {}
    for v1_s122 in v2_s122:
        if v1_s122 in v0_s122:
            v0_s122[v1_s122] = v0_s122[v1_s122] + [v3_s122(v1_s122)]
        else:
            v0_s122[v1_s122] = [v3_s122(v1_s122)]
    return cfg

def step_73(cfg):
    v0_s73 = {}
    for v1_s73 in v2_s73:
        if v1_s73 in v0_s73.keys():
            v0_s73[v1_s73].append(v3_s73(v1_s73))
        else:
            v0_s73[v1_s73] = [v3_s73(v1_s73)]
    return cfg

def step_24(cfg):
    v0_s24 = {}
    for v1_s24 in v2_s24:
        v3_s24 = v4_s24(v1_s24)
        if v1_s24 in v0_s24:
            v0_s24[v1_s24].append(v3_s24)
        else:
            v0_s24[v1_s24] = [v3_s24]
    return cfg

def step_104(cfg):
    v0_s104 = {}
    for v1_s104 in v2_s104:
        v3_s104 = v4_s104(v1_s104)
        if v1_s104 in v0_s104:
            v0_s104[v1_s104].append(v3_s104)
        else:
            v0_s104[v1_s104] = [v3_s104]
    return cfg

def step_55(cfg):
    v0_s55 = {}
    for v1_s55 in range(len(v2_s55)):
        if v2_s55[v1_s55] in v0_s55:
            v0_s55[v2_s55[v1_s55]].append(v3_s55(v2_s55[v1_s55]))
        else:
            v0_s55[v2_s55[v1_s55]] = [v3_s55(v2_s55[v1_s55])]
    return cfg

def step_6(cfg):
    v0_s6 = {}
    for v1_s6 in v2_s6:
        if v1_s6 in v0_s6:
            v0_s6[v1_s6].append(v3_s6(v1_s6))
        else:
            v0_s6[v1_s6] = [v3_s6(v1_s6)]
    return cfg

def step_86(cfg):
    v0_s86 = {}
    for v1_s86 in v2_s86:
        if v1_s86 not in v0_s86:
            v0_s86[v1_s86] = []
        v0_s86[v1_s86].append(v3_s86(v1_s86))
    return cfg

def step_37(cfg):
    v0_s37 = {}
    for v1_s37 in v2_s37:
        if v1_s37 in v0_s37:
            v0_s37[v1_s37] = v0_s37[v1_s37] + [v3_s37(v1_s37)]
        else:
            v0_s37[v1_s37] = [v3_s37(v1_s37)]
    return cfg

def step_117(cfg):
    v0_s117 = {}
    for v1_s117 in v2_s117:
        if v1_s117 in v0_s117:
            v0_s117[v1_s117] = v0_s117[v1_s117] + [v3_s117(v1_s117)]
        else:
            v0_s117[v1_s117] = [v3_s117(v1_s117)]
    return cfg

def step_68(cfg):
    v0_s68 = {}
    for v1_s68 in v2_s68:
        if v1_s68 in v0_s68.keys():
            v0_s68[v1_s68].append(v3_s68(v1_s68))
        else:
            v0_s68[v1_s68] = [v3_s68(v1_s68)]
    return cfg

def step_19(cfg):
    v0_s19 = {}
    for v1_s19 in v2_s19:
        v3_s19 = v4_s19(v1_s19)
        if v1_s19 in v0_s19:
            v0_s19[v1_s19].append(v3_s19)
        else:
            v0_s19[v1_s19] = [v3_s19]
    return cfg
